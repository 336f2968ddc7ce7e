#include "semicov/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "semicov/errors.hpp"

namespace semicov::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join(const std::vector<int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

int af_style_rank(const NumericalSemigroup& s) {
  int rank = 0;
  for (int x : s.msg())
    if (x <= s.frobenius()) ++rank;
  return rank;
}

ordered_json record_json(const NumericalSemigroup& s) {
  ordered_json record;
  record["frobenius"] = s.frobenius();
  record["msg"] = s.msg();
  record["gaps"] = s.gaps();
  record["multiplicity"] = s.multiplicity();
  record["genus"] = s.genus();
  record["type"] = s.is_naturals() ? 1 : s.type();
  return record;
}

std::vector<int> int_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw Error("record key '" + key + "' must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("record key '" + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

void check_field(const json& record, const std::string& key, int expected) {
  const auto it = record.find(key);
  if (it == record.end()) return;
  if (!it->is_number_integer() || it->get<int>() != expected)
    throw Error("record key '" + key + "' does not match the gap list (expected " +
                std::to_string(expected) + ")");
}

void check_list_field(const json& record, const std::string& key,
                      const std::vector<int>& expected) {
  const auto it = record.find(key);
  if (it == record.end()) return;
  if (int_list(*it, key) != expected)
    throw Error("record key '" + key + "' does not match the gap list");
}

NumericalSemigroup from_record_json(const json& record) {
  if (!record.is_object()) throw Error("a semigroup record must be a JSON object");
  const auto it = record.find("gaps");
  if (it == record.end()) throw Error("a semigroup record needs a 'gaps' key");
  NumericalSemigroup s = NumericalSemigroup::from_gaps(int_list(*it, "gaps"));

  check_field(record, "frobenius", s.frobenius());
  check_field(record, "multiplicity", s.multiplicity());
  check_field(record, "genus", s.genus());
  check_field(record, "type", s.is_naturals() ? 1 : s.type());
  check_list_field(record, "msg", s.msg());
  return s;
}

json parse_or_throw(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw Error("not valid JSON: " + text.substr(0, 80));
  return parsed;
}

/// jsonl streams carry {"F": ...} and {"count": ...} bookkeeping lines.
bool is_envelope_line(const json& j) {
  if (!j.is_object() || j.size() != 1) return false;
  return j.contains("F") || j.contains("count");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "jsonl") return Format::jsonl;
  if (name == "csv") return Format::csv;
  if (name == "dot") return Format::dot;
  if (name == "plain") return Format::plain;
  throw Error("unknown format '" + name + "' (expected json, jsonl, csv, dot or plain)");
}

std::string semigroup_record(const NumericalSemigroup& s) { return record_json(s).dump(); }

NumericalSemigroup semigroup_from_record(const std::string& text) {
  return from_record_json(parse_or_throw(text));
}

std::vector<NumericalSemigroup> read_semigroups(std::istream& is) {
  std::ostringstream buffer;
  buffer << is.rdbuf();
  const std::string text = buffer.str();

  std::vector<NumericalSemigroup> out;
  json parsed = json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) {
    if (parsed.is_object() && parsed.contains("members")) parsed = parsed["members"];
    if (parsed.is_array()) {
      for (const json& record : parsed) out.push_back(from_record_json(record));
      return out;
    }
    out.push_back(from_record_json(parsed));
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record = parse_or_throw(line);
    if (is_envelope_line(record)) continue;
    out.push_back(from_record_json(record));
  }
  return out;
}

std::string csv_header() {
  return "frobenius,multiplicity,genus,type,embedding_dimension,rank,msg,gaps";
}

std::string csv_row(const NumericalSemigroup& s) {
  std::ostringstream os;
  os << s.frobenius() << ',' << s.multiplicity() << ',' << s.genus() << ','
     << (s.is_naturals() ? 1 : s.type()) << ',' << s.embedding_dimension() << ','
     << af_style_rank(s) << ',' << join(s.msg(), ";") << ',' << join(s.gaps(), ";");
  return os.str();
}

std::string covariety_record(const Covariety& c, int indent) {
  ordered_json record;
  record["delta"] = record_json(c.minimum());
  ordered_json members = ordered_json::array();
  for (const NumericalSemigroup& s : c.members()) members.push_back(record_json(s));
  record["members"] = std::move(members);
  record["maximal"] = c.maximal_member_indices();
  return record.dump(indent);
}

std::uint64_t write_enumeration(std::ostream& os, int frobenius, Format format,
                                const EnumerateOptions& options) {
  delta(frobenius);  // reject bad F before the header hits the stream
  switch (format) {
    case Format::jsonl: {
      os << ordered_json{{"F", frobenius}}.dump() << '\n';
      const std::uint64_t count = enumerate(
          frobenius,
          [&os](const FrontierNode& node) {
            os << record_json(node.semigroup).dump() << '\n';
          },
          options);
      os << ordered_json{{"count", count}}.dump() << '\n';
      return count;
    }
    case Format::csv: {
      os << csv_header() << '\n';
      return enumerate(
          frobenius,
          [&os](const FrontierNode& node) { os << csv_row(node.semigroup) << '\n'; },
          options);
    }
    case Format::json: {
      ordered_json doc;
      doc["F"] = frobenius;
      ordered_json members = ordered_json::array();
      const std::uint64_t count = enumerate(
          frobenius,
          [&members](const FrontierNode& node) {
            members.push_back(record_json(node.semigroup));
          },
          options);
      doc["members"] = std::move(members);
      doc["count"] = count;
      os << doc.dump(2) << '\n';
      return count;
    }
    case Format::plain: {
      const std::uint64_t count = enumerate(
          frobenius,
          [&os](const FrontierNode& node) { os << display_string(node.semigroup) << '\n'; },
          options);
      os << count << '\n';
      return count;
    }
    case Format::dot:
      break;
  }
  throw Error("the dot format applies to trees only");
}

void write_members(std::ostream& os, int frobenius,
                   const std::vector<NumericalSemigroup>& members, Format format) {
  switch (format) {
    case Format::jsonl: {
      os << ordered_json{{"F", frobenius}}.dump() << '\n';
      for (const NumericalSemigroup& s : members)
        os << record_json(s).dump() << '\n';
      os << ordered_json{{"count", members.size()}}.dump() << '\n';
      return;
    }
    case Format::csv: {
      os << csv_header() << '\n';
      for (const NumericalSemigroup& s : members) os << csv_row(s) << '\n';
      return;
    }
    case Format::json: {
      ordered_json doc;
      doc["F"] = frobenius;
      ordered_json list = ordered_json::array();
      for (const NumericalSemigroup& s : members) list.push_back(record_json(s));
      doc["members"] = std::move(list);
      doc["count"] = members.size();
      os << doc.dump(2) << '\n';
      return;
    }
    case Format::plain: {
      for (const NumericalSemigroup& s : members) os << display_string(s) << '\n';
      os << members.size() << '\n';
      return;
    }
    case Format::dot:
      break;
  }
  throw Error("the dot format applies to trees only");
}

namespace {

std::string gap_label(const NumericalSemigroup& s) {
  if (s.is_naturals()) return "-";
  return join(s.gaps(), ",");
}

}  // namespace

void write_tree_dot(std::ostream& os, const Covariety& c) {
  const Covariety::Tree tree = c.tree();
  os << "digraph covariety {\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    os << "  n" << i << " [label=\"" << gap_label(c.members()[i]) << "\"];\n";
  for (const auto& [child, parent] : tree.edges)
    os << "  n" << child << " -> n" << parent << ";\n";
  os << "}\n";
}

std::string tree_record(const Covariety& c, int indent) {
  const Covariety::Tree tree = c.tree();
  ordered_json doc;
  ordered_json vertices = ordered_json::array();
  for (const NumericalSemigroup& s : c.members()) vertices.push_back(s.gaps());
  doc["vertices"] = std::move(vertices);
  doc["root"] = tree.root;
  ordered_json edges = ordered_json::array();
  for (const auto& [child, parent] : tree.edges)
    edges.push_back(ordered_json::array({child, parent}));
  doc["edges"] = std::move(edges);
  return doc.dump(indent);
}

}  // namespace semicov::io
