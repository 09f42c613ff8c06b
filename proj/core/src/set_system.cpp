#include "eulermerge/set_system.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "eulermerge/error.hpp"
#include "json.hpp"

namespace eulermerge {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

SetSystem parse_lines(std::string_view doc) {
  SetMap sets;
  std::map<std::string, std::string, std::less<>> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= doc.size()) {
    auto nl = doc.find('\n', pos);
    std::string_view line = doc.substr(pos, nl == std::string_view::npos ? doc.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? doc.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    auto eq = line.find('=');
    if (eq != std::string_view::npos && (colon == std::string_view::npos || eq < colon)) {
      std::string label(trim(line.substr(0, eq)));
      std::string name(trim(line.substr(eq + 1)));
      if (label.empty()) throw ParseError(where(line_no) + "missing label before '='");
      if (!names.emplace(label, name).second)
        throw ParseError(where(line_no) + "duplicate name for label '" + label + "'");
      continue;
    }
    if (colon == std::string_view::npos)
      throw ParseError(where(line_no) + "expected 'label: elem, ...'");

    std::string label(trim(line.substr(0, colon)));
    if (label.empty()) throw ParseError(where(line_no) + "missing label before ':'");
    if (sets.contains(label)) throw ParseError(where(line_no) + "duplicate label '" + label + "'");

    ElementSet elements;
    std::string_view rest = line.substr(colon + 1);
    if (!trim(rest).empty()) {
      std::size_t start = 0;
      while (true) {
        auto comma = rest.find(',', start);
        auto token = trim(rest.substr(start, comma == std::string_view::npos ? rest.size() - start
                                                                            : comma - start));
        if (token.empty())
          throw ParseError(where(line_no) + "empty element name in set '" + label + "'");
        elements.emplace(token);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (elements.empty()) throw ParseError(where(line_no) + "set '" + label + "' is empty");
    sets.emplace(std::move(label), std::move(elements));
  }
  return SetSystem::from_sets(std::move(sets), std::move(names));
}

SetSystem parse_structured(std::string_view doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed structured document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
    throw ParseError("structured document needs a top-level 'sets' array");

  SetMap sets;
  std::map<std::string, std::string, std::less<>> names;
  for (const auto& rec : j["sets"]) {
    if (!rec.is_object() || !rec.contains("label") || !rec["label"].is_string() ||
        !rec.contains("elements") || !rec["elements"].is_array())
      throw ParseError("each set record needs a string 'label' and an 'elements' array");
    std::string label(trim(rec["label"].get<std::string>()));
    if (label.empty()) throw ParseError("empty set label");
    if (sets.contains(label)) throw ParseError("duplicate label '" + label + "'");
    ElementSet elements;
    for (const auto& el : rec["elements"]) {
      if (!el.is_string()) throw ParseError("element of set '" + label + "' is not a string");
      auto name = trim(el.get_ref<const std::string&>());
      if (name.empty()) throw ParseError("empty element name in set '" + label + "'");
      elements.emplace(name);
    }
    if (elements.empty()) throw ParseError("set '" + label + "' is empty");
    if (rec.contains("name")) {
      if (!rec["name"].is_string()) throw ParseError("'name' of set '" + label + "' is not a string");
      names.emplace(label, rec["name"].get<std::string>());
    }
    sets.emplace(std::move(label), std::move(elements));
  }
  return SetSystem::from_sets(std::move(sets), std::move(names));
}

}  // namespace

SetSystem SetSystem::from_sets(SetMap sets, std::map<std::string, std::string, std::less<>> names) {
  if (sets.empty()) throw ParseError("set system has no sets");
  SetSystem out;
  for (const auto& [label, elements] : sets) {
    if (label.empty()) throw ParseError("empty set label");
    if (label.find_first_of(":=,#") != std::string::npos)
      throw ParseError("label '" + label + "' contains a reserved character");
    if (elements.empty()) throw ParseError("set '" + label + "' is empty");
    out.universe_.insert(elements.begin(), elements.end());
  }
  for (const auto& [label, name] : names)
    if (!sets.contains(label)) throw ParseError("name given for unknown label '" + label + "'");
  out.sets_ = std::move(sets);
  out.names_ = std::move(names);
  return out;
}

std::vector<std::string> SetSystem::labels() const {
  std::vector<std::string> out;
  out.reserve(sets_.size());
  for (const auto& [label, _] : sets_) out.push_back(label);
  return out;
}

bool SetSystem::has_label(std::string_view label) const { return sets_.find(label) != sets_.end(); }

const ElementSet& SetSystem::elements(std::string_view label) const {
  auto it = sets_.find(label);
  if (it == sets_.end()) throw UnknownLabel(std::string(label));
  return it->second;
}

std::string SetSystem::display_name(std::string_view label) const {
  auto it = names_.find(label);
  return it == names_.end() ? std::string(label) : it->second;
}

SetSystem parse_set_system(std::string_view document, InputFormat format) {
  if (trim(document).empty()) throw ParseError("empty document");
  if (format == InputFormat::kAuto)
    format = trim(document).front() == '{' ? InputFormat::kStructured : InputFormat::kLines;
  return format == InputFormat::kStructured ? parse_structured(document) : parse_lines(document);
}

SetSystem load_set_system(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set_system(ss.str(), format);
}

std::string to_lines(const SetSystem& system) {
  std::string out;
  for (const auto& [label, name] : system.names()) out += label + " = " + name + "\n";
  for (const auto& [label, elements] : system.sets()) {
    out += label + ":";
    bool first = true;
    for (const auto& e : elements) {
      out += first ? " " : ", ";
      out += e;
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string to_structured(const SetSystem& system) {
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const auto& [label, elements] : system.sets()) {
    nlohmann::ordered_json rec;
    rec["label"] = label;
    rec["elements"] = std::vector<std::string>(elements.begin(), elements.end());
    if (auto it = system.names().find(label); it != system.names().end()) rec["name"] = it->second;
    sets.push_back(std::move(rec));
  }
  nlohmann::ordered_json doc;
  doc["sets"] = std::move(sets);
  return doc.dump(2) + "\n";
}

LabelSet cover(const SetSystem& system, std::string_view element) {
  if (system.universe().find(element) == system.universe().end())
    throw UnknownElement(std::string(element));
  std::vector<std::string> labels;
  for (const auto& [label, elements] : system.sets())
    if (elements.find(element) != elements.end()) labels.push_back(label);
  return LabelSet(std::move(labels));
}

std::vector<LabelSet> AbstractDescription::labels() const {
  std::vector<LabelSet> out;
  out.reserve(zones.size());
  for (const auto& z : zones) out.push_back(z.label);
  return out;
}

AbstractDescription abstract_description(const SetSystem& system) {
  std::map<LabelSet, ElementSet> groups;
  groups[LabelSet{}];
  for (const auto& u : system.universe()) groups[cover(system, u)].insert(u);

  AbstractDescription out;
  out.zones.reserve(groups.size());
  for (auto& [label, elements] : groups) out.zones.push_back(Zone{label, std::move(elements)});
  std::stable_sort(out.zones.begin(), out.zones.end(),
                   [](const Zone& a, const Zone& b) { return a.label.key() < b.label.key(); });
  return out;
}

SetSystem merge_sets_in_system(const SetSystem& system, std::string_view l1, std::string_view l2) {
  if (l1 == l2) throw ContractViolation("cannot merge set '" + std::string(l1) + "' with itself");
  const auto& a = system.elements(l1);
  const auto& b = system.elements(l2);
  std::string kept(std::min(l1, l2));
  std::string absorbed(std::max(l1, l2));

  SetMap sets = system.sets();
  ElementSet merged = a;
  merged.insert(b.begin(), b.end());
  sets.erase(absorbed);
  sets[kept] = std::move(merged);

  auto names = system.names();
  names.erase(absorbed);
  return SetSystem::from_sets(std::move(sets), std::move(names));
}

}  // namespace eulermerge
