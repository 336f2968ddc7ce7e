#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <semicov/covariety.hpp>
#include <semicov/errors.hpp>
#include <semicov/frobenius_fixed.hpp>
#include <semicov/io.hpp>
#include <semicov/oracle.hpp>
#include <semicov/semigroup.hpp>

using namespace semicov;

namespace {

struct IoFailure {
  std::string message;
};

/// Writes to the --output path when given, to stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoFailure{"cannot open '" + path + "' for writing"};
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void finish() {
    stream().flush();
    if (stream().fail()) throw IoFailure{"write failed"};
  }

 private:
  std::ofstream file_;
};

int env_workers() {
  const char* env = std::getenv("SEMICOV_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

NumericalSemigroup build_input(const std::vector<int>& values, bool as_gaps) {
  if (as_gaps) return NumericalSemigroup::from_gaps(values);
  return NumericalSemigroup::from_generators(values);
}

std::string joined(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::vector<int> pf_with_naturals_convention(const NumericalSemigroup& s) {
  if (s.is_naturals()) return {-1};
  return s.pseudo_frobenius();
}

std::vector<int> sg_with_naturals_convention(const NumericalSemigroup& s) {
  if (s.is_naturals()) return {};
  return s.special_gaps();
}

void write_analysis_plain(std::ostream& os, const NumericalSemigroup& s) {
  os << "S = " << display_string(s) << '\n'
     << "frobenius: " << s.frobenius() << '\n'
     << "multiplicity: " << s.multiplicity() << '\n'
     << "genus: " << s.genus() << '\n'
     << "embedding_dimension: " << s.embedding_dimension() << '\n'
     << "type: " << (s.is_naturals() ? 1 : s.type()) << '\n'
     << "msg:" << joined(s.msg()) << '\n'
     << "pseudo_frobenius:" << joined(pf_with_naturals_convention(s)) << '\n'
     << "special_gaps:" << joined(sg_with_naturals_convention(s)) << '\n'
     << "med: " << (s.is_med() ? "yes" : "no") << '\n'
     << "irreducible: " << (is_irreducible(s) ? "yes" : "no") << '\n';
}

nlohmann::ordered_json analysis_record(const NumericalSemigroup& s) {
  auto record = nlohmann::ordered_json::parse(io::semigroup_record(s));
  record["embedding_dimension"] = s.embedding_dimension();
  record["pseudo_frobenius"] = pf_with_naturals_convention(s);
  record["special_gaps"] = sg_with_naturals_convention(s);
  record["med"] = s.is_med();
  record["irreducible"] = is_irreducible(s);
  return record;
}

int cmd_analyze(Output& out, const NumericalSemigroup& s, io::Format format) {
  switch (format) {
    case io::Format::plain:
      write_analysis_plain(out.stream(), s);
      break;
    case io::Format::json:
    case io::Format::jsonl:
      out.stream() << analysis_record(s).dump() << '\n';
      break;
    case io::Format::csv:
      out.stream() << io::csv_header() << '\n' << io::csv_row(s) << '\n';
      break;
    case io::Format::dot:
      throw Error("analyze supports plain, json, jsonl or csv");
  }
  return 0;
}

int cmd_closure(Output& out, int f, const std::vector<int>& values, io::Format format) {
  const NumericalSemigroup s = af_closure(f, values);
  switch (format) {
    case io::Format::json:
    case io::Format::jsonl:
      out.stream() << io::semigroup_record(s) << '\n';
      break;
    case io::Format::plain:
      out.stream() << display_string(s) << '\n';
      break;
    case io::Format::csv:
      out.stream() << io::csv_header() << '\n' << io::csv_row(s) << '\n';
      break;
    case io::Format::dot:
      throw Error("closure supports json, jsonl, csv or plain");
  }
  return 0;
}

int cmd_chain(Output& out, const NumericalSemigroup& s, int f, io::Format format) {
  const int frobenius = f != 0 ? f : s.frobenius();
  const ChainCad chain = chain_cad(s, frobenius);
  io::write_members(out.stream(), frobenius, chain.links, format);
  return 0;
}

std::vector<NumericalSemigroup> read_family(const std::vector<std::string>& files) {
  std::vector<NumericalSemigroup> family;
  for (const std::string& path : files) {
    std::vector<NumericalSemigroup> part;
    if (path == "-") {
      part = io::read_semigroups(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw IoFailure{"cannot open '" + path + "' for reading"};
      part = io::read_semigroups(in);
    }
    family.insert(family.end(), part.begin(), part.end());
  }
  return family;
}

int cmd_cov_generate(Output& out, const std::vector<std::string>& files, io::Format format) {
  const Covariety c = generated_covariety(read_family(files));
  switch (format) {
    case io::Format::json:
      out.stream() << io::covariety_record(c, 2) << '\n';
      break;
    case io::Format::jsonl:
      io::write_members(out.stream(), c.minimum().frobenius(), c.members(), format);
      break;
    case io::Format::plain:
      for (const NumericalSemigroup& s : c.members())
        out.stream() << display_string(s) << '\n';
      out.stream() << c.size() << '\n';
      break;
    case io::Format::csv:
    case io::Format::dot:
      throw Error("cov-generate supports json, jsonl or plain");
  }
  return 0;
}

int cmd_count_rank1(Output& out, int f, io::Format format) {
  const std::size_t count = rank1_classify(f).size();
  switch (format) {
    case io::Format::plain:
      out.stream() << count << '\n';
      break;
    case io::Format::json:
    case io::Format::jsonl:
      out.stream() << nlohmann::ordered_json{{"F", f}, {"count", count}}.dump() << '\n';
      break;
    case io::Format::csv:
    case io::Format::dot:
      throw Error("count-rank1 supports plain, json or jsonl");
  }
  return 0;
}

int cmd_verify(Output& out, int f, io::Format format) {
  std::vector<NumericalSemigroup> mine = af_members(f);
  std::sort(mine.begin(), mine.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
              return canonical_less(a, b);
            });
  const std::vector<NumericalSemigroup> brute = oracle::brute_enumerate(f);

  std::vector<NumericalSemigroup> missing;
  std::vector<NumericalSemigroup> extra;
  std::set_difference(brute.begin(), brute.end(), mine.begin(), mine.end(),
                      std::back_inserter(missing),
                      [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
                        return canonical_less(a, b);
                      });
  std::set_difference(mine.begin(), mine.end(), brute.begin(), brute.end(),
                      std::back_inserter(extra),
                      [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
                        return canonical_less(a, b);
                      });
  const bool match = missing.empty() && extra.empty();

  switch (format) {
    case io::Format::plain: {
      std::ostream& os = out.stream();
      os << "F = " << f << '\n'
         << "enumerate = " << mine.size() << '\n'
         << "brute_force = " << brute.size() << '\n';
      for (const NumericalSemigroup& s : missing) os << "missing: " << display_string(s) << '\n';
      for (const NumericalSemigroup& s : extra) os << "extra: " << display_string(s) << '\n';
      os << (match ? "match" : "mismatch") << '\n';
      break;
    }
    case io::Format::json: {
      nlohmann::ordered_json doc;
      doc["F"] = f;
      doc["enumerate"] = mine.size();
      doc["brute_force"] = brute.size();
      doc["match"] = match;
      auto records = [](const std::vector<NumericalSemigroup>& list) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const NumericalSemigroup& s : list)
          a.push_back(nlohmann::ordered_json::parse(io::semigroup_record(s)));
        return a;
      };
      doc["missing"] = records(missing);
      doc["extra"] = records(extra);
      out.stream() << doc.dump(2) << '\n';
      break;
    }
    case io::Format::jsonl: {
      io::write_members(out.stream(), f, brute, io::Format::jsonl);
      out.stream() << nlohmann::ordered_json{{"match", match}}.dump() << '\n';
      break;
    }
    case io::Format::csv:
    case io::Format::dot:
      throw Error("verify supports plain, json or jsonl");
  }
  return match ? 0 : 1;
}

int cmd_tree(Output& out, int f, io::Format format) {
  const Covariety c = Covariety::validate(af_members(f));
  switch (format) {
    case io::Format::dot:
      io::write_tree_dot(out.stream(), c);
      break;
    case io::Format::json:
      out.stream() << io::tree_record(c, 2) << '\n';
      break;
    case io::Format::jsonl:
    case io::Format::csv:
    case io::Format::plain:
      throw Error("tree supports dot or json");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroups with a fixed Frobenius number, and their covarieties"};
  app.require_subcommand(1);

  int frobenius = 0;
  std::vector<int> values;
  bool gaps_input = false;
  int parallel = env_workers();
  bool order_insensitive = false;
  bool low_memory = false;
  std::string output_path;
  std::vector<std::string> files;
  int exit_code = 0;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "write to this file instead of stdout");
  };
  std::vector<std::unique_ptr<std::string>> formats;
  auto add_format = [&formats](CLI::App* sub, const char* def, const char* help) -> std::string& {
    formats.push_back(std::make_unique<std::string>(def));
    std::string& slot = *formats.back();
    sub->add_option("--format", slot, help)->capture_default_str();
    return slot;
  };

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "stream every numerical semigroup with Frobenius number F");
  enumerate_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number")->required();
  std::string& enumerate_format = add_format(enumerate_cmd, "jsonl", "jsonl, csv, json or plain");
  enumerate_cmd->add_option("--parallel", parallel, "worker threads for level expansion")
      ->capture_default_str();
  enumerate_cmd->add_flag("--order-insensitive", order_insensitive,
                          "drop the canonical per-level order for speed");
  enumerate_cmd->add_flag("--low-memory", low_memory,
                          "recompute Apery tables per level instead of carrying them");
  add_output(enumerate_cmd);
  enumerate_cmd->callback([&] {
    if (parallel < 1) throw Error("--parallel must be at least 1");
    Output out(output_path);
    EnumerateOptions options{parallel, order_insensitive, low_memory};
    io::write_enumeration(out.stream(), frobenius, io::parse_format(enumerate_format), options);
    out.finish();
  });

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "report the invariants of one semigroup");
  analyze_cmd->add_option("values", values, "generators, or gaps with --gaps")->required();
  analyze_cmd->add_flag("--gaps", gaps_input, "treat the values as the full gap list");
  std::string& analyze_format = add_format(analyze_cmd, "plain", "plain, json, jsonl or csv");
  add_output(analyze_cmd);
  analyze_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_analyze(out, build_input(values, gaps_input), io::parse_format(analyze_format));
    out.finish();
  });

  CLI::App* closure_cmd =
      app.add_subcommand("closure", "least semigroup with Frobenius number F containing the values");
  closure_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number")->required();
  closure_cmd->add_option("values", values, "elements of the generating set (may be empty)");
  std::string& closure_format = add_format(closure_cmd, "json", "json, jsonl, csv or plain");
  add_output(closure_cmd);
  closure_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_closure(out, frobenius, values, io::parse_format(closure_format));
    out.finish();
  });

  CLI::App* chain_cmd =
      app.add_subcommand("chain", "multiplicity-removal chain from the semigroup down to {0, F+1, ->}");
  chain_cmd->add_option("values", values, "generators, or gaps with --gaps")->required();
  chain_cmd->add_flag("--gaps", gaps_input, "treat the values as the full gap list");
  chain_cmd->add_option("-F,--frobenius", frobenius,
                        "chain with respect to this Frobenius number (default: F of the input)");
  std::string& chain_format = add_format(chain_cmd, "jsonl", "jsonl, csv, json or plain");
  add_output(chain_cmd);
  chain_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_chain(out, build_input(values, gaps_input), frobenius, io::parse_format(chain_format));
    out.finish();
  });

  CLI::App* cov_cmd = app.add_subcommand(
      "cov-generate", "smallest covariety containing the semigroups read from JSON files");
  cov_cmd->add_option("files", files, "record, array or jsonl files ('-' for stdin)")->required();
  std::string& cov_format = add_format(cov_cmd, "json", "json, jsonl or plain");
  add_output(cov_cmd);
  cov_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_cov_generate(out, files, io::parse_format(cov_format));
    out.finish();
  });

  CLI::App* rank1_cmd =
      app.add_subcommand("count-rank1", "number of rank-one semigroups with Frobenius number F");
  rank1_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number")->required();
  std::string& rank1_format = add_format(rank1_cmd, "plain", "plain, json or jsonl");
  add_output(rank1_cmd);
  rank1_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_count_rank1(out, frobenius, io::parse_format(rank1_format));
    out.finish();
  });

  CLI::App* max_rank_cmd =
      app.add_subcommand("max-rank", "semigroups with Frobenius number F of maximal rank m-1");
  max_rank_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number")->required();
  std::string& max_rank_format = add_format(max_rank_cmd, "jsonl", "jsonl, csv, json or plain");
  add_output(max_rank_cmd);
  max_rank_cmd->callback([&] {
    Output out(output_path);
    io::write_members(out.stream(), frobenius, max_rank_members(frobenius),
                      io::parse_format(max_rank_format));
    out.finish();
  });

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the enumeration against the exhaustive brute-force oracle");
  verify_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number (at most 22)")->required();
  std::string& verify_format = add_format(verify_cmd, "plain", "plain, json or jsonl");
  add_output(verify_cmd);
  verify_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_verify(out, frobenius, io::parse_format(verify_format));
    out.finish();
  });

  CLI::App* tree_cmd = app.add_subcommand(
      "tree", "rooted tree of all semigroups with Frobenius number F, child = parent minus multiplicity");
  tree_cmd->add_option("-F,--frobenius", frobenius, "Frobenius number")->required();
  std::string& tree_format = add_format(tree_cmd, "dot", "dot or json");
  add_output(tree_cmd);
  tree_cmd->callback([&] {
    Output out(output_path);
    exit_code = cmd_tree(out, frobenius, io::parse_format(tree_format));
    out.finish();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
