#include "bumpless/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bumpless/codec.hpp"
#include "bumpless/maximal.hpp"
#include "bumpless/oracle.hpp"
#include "bumpless/render.hpp"
#include "bumpless/snow.hpp"

namespace bumpless {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<Permutation> read_sample(const std::string& path) {
  std::vector<Permutation> perms;
  std::istringstream lines(read_file(path));
  for (std::string line; std::getline(lines, line);) {
    line.erase(std::find(line.begin(), line.end(), '#'), line.end());
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (!line.empty()) perms.push_back(parse_permutation(line));
  }
  return perms;
}

std::string ascii_frames(const MaximalResult& result) {
  std::string out = "start\n" + render_ascii(result.start.grid, result.start.stars);
  TileGrid g = result.start.grid;
  std::set<Cell> stars = result.start.stars;
  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const TraceEvent& e = result.trace[k];
    out += "\nevent " + std::to_string(k + 1) + ": " + to_string(e) + "\n";
    if (e.kind == EventKind::skip) continue;
    g = replay_trace(g, std::span(&e, 1));
    std::erase_if(stars, [&](Cell c) { return g.at(c) != Tile::horizontal; });
    if (e.kind == EventKind::droop) {
      std::erase_if(stars, [&](Cell c) { return c.row == result.start.perm.preimage(e.pipe); });
    }
    out += render_ascii(g, stars);
  }
  return out;
}

std::string weights_line(const Mbpd& m) {
  return "rwt: " + to_string(m.rwt()) + " / cwt: " + to_string(m.cwt()) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marked bumpless pipedreams: rajcodes, maximal diagrams, Grothendieck polynomials",
               "bumpless"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string format = "ascii";
  std::string out_path;
  std::string file;
  std::string sample;
  bool trace = false;
  bool maximal_only = false;
  bool count_only = false;
  bool dbl = false;
  bool cm = false;
  int n = 0;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int bound = kDefaultEnumerationBound;

  auto* rajcode_cmd = app.add_subcommand("rajcode", "Print rajcode(w) and rajcode(w^-1)");
  rajcode_cmd->add_option("W", perm_text, "Permutation, e.g. 251634 or 2,5,1,6,3,4")->required();

  auto* maximal_cmd = app.add_subcommand("maximal", "Build the maximal marked bumpless pipedream");
  maximal_cmd->add_option("W", perm_text, "Permutation")->required();
  maximal_cmd->add_flag("--trace", trace, "Also emit every intermediate step");
  maximal_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  maximal_cmd->add_option("--out", out_path, "Write the output to this file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every marked bumpless pipedream of w");
  enumerate_cmd->add_option("W", perm_text, "Permutation")->required();
  enumerate_cmd->add_flag("--maximal-only", maximal_only, "Only diagrams of maximal weight");
  enumerate_cmd->add_flag("--count", count_only, "Print the number of diagrams only");
  enumerate_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"ascii", "json"}));
  enumerate_cmd->add_option("--bound", bound, "Largest n to enumerate")->check(CLI::Range(1, 7));

  auto* groth_cmd = app.add_subcommand("groth", "Print a Grothendieck or Castelnuovo-Mumford polynomial");
  groth_cmd->add_option("W", perm_text, "Permutation")->required();
  groth_cmd->add_flag("--double", dbl, "Use the double (x;y) version");
  groth_cmd->add_flag("--cm", cm, "Castelnuovo-Mumford polynomial instead");
  groth_cmd->add_option("--bound", bound, "Largest n to enumerate")->check(CLI::Range(1, 7));

  auto* verify_cmd = app.add_subcommand("verify", "Check the maximal construction against enumeration");
  verify_cmd->add_option("--n", n, "Check all of S_n")->check(CLI::Range(1, kMaxN));
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--sample", sample, "File with one permutation per line");
  verify_cmd->add_option("--bound", bound, "Largest n to enumerate")->check(CLI::Range(1, 7));

  auto* render_cmd = app.add_subcommand("render", "Re-render a JSON diagram document");
  render_cmd->add_option("FILE", file, "Diagram document")->required();
  render_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"ascii", "svg", "json"}));
  render_cmd->add_option("--out", out_path, "Write the output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
  };

  try {
    if (*rajcode_cmd) {
      const auto [raj, raj_inv] = rajcode_pair(parse_permutation(perm_text));
      out << "rajcode: " << to_string(raj) << " / inverse: " << to_string(raj_inv) << "\n";
    } else if (*maximal_cmd) {
      const MaximalResult result = run_maximal(parse_permutation(perm_text));
      if (format == "json") {
        if (trace) {
          Json doc;
          doc["srpd"] = to_json(result.start);
          doc["trace"] = to_json(result.trace);
          doc["result"] = to_json(result.diagram);
          emit(doc.dump(2) + "\n");
        } else {
          emit(encode(result.diagram));
        }
      } else if (format == "svg") {
        if (trace && out_path.empty()) throw UsageError("--format svg --trace needs --out for the SVG");
        emit(render_svg(result.diagram.grid()));
        if (trace) out << encode_trace(result.trace);
      } else {
        std::string text = trace ? ascii_frames(result) + "\nresult\n" : std::string();
        text += render_ascii(result.diagram.grid()) + weights_line(result.diagram);
        emit(text);
      }
    } else if (*enumerate_cmd) {
      const EnumerationReport report = enumerate_mbpds(parse_permutation(perm_text), bound);
      const auto& list = maximal_only ? report.maximal : report.diagrams;
      if (count_only) {
        out << list.size() << "\n";
      } else if (format == "json") {
        Json docs = Json::array();
        for (const Mbpd& m : list) docs.push_back(to_json(m));
        out << docs.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < list.size(); ++k) {
          if (k) out << "\n";
          out << "diagram " << k + 1 << " weight " << list[k].weight() << "\n"
              << render_ascii(list[k].grid()) << weights_line(list[k]);
        }
      }
    } else if (*groth_cmd) {
      const EnumerationReport report = enumerate_mbpds(parse_permutation(perm_text), bound);
      const auto [single, both] = cm ? cm_polys(report) : grothendieck_polys(report);
      out << to_string(dbl ? both : single) << "\n";
    } else if (*verify_cmd) {
      std::vector<Permutation> perms;
      if (!sample.empty()) perms = read_sample(sample);
      if (n > 0) {
        auto all = all_permutations(n);
        perms.insert(perms.end(), all.begin(), all.end());
      }
      if (perms.empty()) throw UsageError("verify needs --n or --sample");
      const VerificationReport report = verify_permutations(std::move(perms), jobs, bound);
      out << to_tsv(report);
      if (const VerificationRecord* bad = report.first_failure()) {
        err << report.failures() << " of " << report.records.size()
            << " permutations failed; smallest counterexample " << bad->w.to_string();
        if (!bad->error.empty()) err << ": " << bad->error;
        err << "\n";
        return kExitVerificationFailed;
      }
    } else if (*render_cmd) {
      const std::string text = file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                           : read_file(file);
      Json doc;
      try {
        doc = Json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::decode_error, std::string("malformed JSON: ") + e.what());
      }
      if (doc.is_object() && doc.contains("result")) doc = doc.at("result");
      const DiagramDocument d = diagram_from_json(doc);
      const std::set<Cell> stars = d.stars.value_or(std::set<Cell>{});
      if (format == "json") {
        emit(d.stars ? to_json(Srpd{d.diagram.grid(), d.diagram.perm(), stars, {}}).dump(2) + "\n"
                     : encode(d.diagram));
      } else if (format == "svg") {
        emit(render_svg(d.diagram.grid(), stars));
      } else {
        emit(render_ascii(d.diagram.grid(), stars) + weights_line(d.diagram));
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated (" << e.invariant() << "): " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_internal(e.code())) return kExitInternal;
    if (e.code() == Errc::bound_exceeded) return kExitUsage;
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace bumpless
