// Copyright 2026 The Capset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "capset/bounds.h"
#include "capset/build_plan.h"
#include "capset/constructions.h"
#include "capset/errors.h"
#include "capset/gf3.h"
#include "capset/patterns.h"
#include "capset/satgen.h"
#include "capset/set_io.h"
#include "capset/version.h"

namespace capset::cli {

namespace {

namespace fs = std::filesystem;

enum class Format { kHuman, kTsv, kJson };

// Input errors that are not parse errors of a file.
class UsageError : public Error {
 public:
  using Error::Error;
};

VectorSet ReadVectors(const std::string& path) { return ReadSetFile(path).set; }

void WriteOrPrint(std::ostream& out, const std::string& path,
                  const VectorSet& s, bool admissible_header) {
  if (path.empty()) {
    if (admissible_header) {
      WriteAdmissible(out, s);
    } else {
      WriteSet(out, s);
    }
    return;
  }
  WriteSetFile(path, s, admissible_header);
  out << "wrote " << s.size() << " vectors to " << path << '\n';
}

std::string JoinWitness(const std::vector<TernaryVector>& witness,
                        std::string_view sep) {
  std::string text;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) text += sep;
    text += witness[i].ToString();
  }
  return text;
}

// Prints the verdict under `what`; returns the exit code.
int Report(std::ostream& out, std::string_view what, const Verdict& v) {
  if (v.ok()) {
    out << what << ": pass\n";
    return kExitOk;
  }
  out << what << ": FAIL (" << ViolationName(v.violation) << ")\n";
  if (!v.detail.empty()) out << "detail: " << v.detail << '\n';
  const bool sum = v.violation == Violation::kCapTriple ||
                   v.violation == Violation::kExtendableCondition1 ||
                   v.violation == Violation::kExtendableCondition2 ||
                   (v.violation == Violation::kNotCapSet && v.witness.size() == 3);
  if (sum) {
    out << "witness " << JoinWitness(v.witness, "+") << "="
        << TernaryVector(v.witness.front().size()).ToString() << '\n';
  } else if (!v.witness.empty()) {
    out << "witness " << JoinWitness(v.witness, " ") << '\n';
  }
  return kExitVerificationFailed;
}

Format ParseFormat(const std::string& name) {
  if (name == "human") return Format::kHuman;
  if (name == "tsv") return Format::kTsv;
  if (name == "json") return Format::kJson;
  throw UsageError("unknown format '" + name + "'");
}

void PrintBound(std::ostream& out, const BoundReport& r, Format format,
                bool exact) {
  const std::size_t digits = DecimalDigitCount(r.size);
  switch (format) {
    case Format::kTsv:
      out << r.provenance << '\t' << r.dimension << '\t' << digits << '\t'
          << r.bound;
      if (exact) out << '\t' << r.size.str();
      out << '\n';
      break;
    case Format::kJson: {
      nlohmann::json j{{"plan", r.provenance},
                       {"dimension", r.dimension},
                       {"size_digits", digits},
                       {"bound", r.bound}};
      if (exact) j["size"] = r.size.str();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kHuman:
      out << "plan       " << r.provenance << '\n'
          << "dimension  " << r.dimension << '\n'
          << "size       " << (exact ? r.size.str() : std::to_string(digits) +
                                                          " decimal digits")
          << '\n'
          << "bound      " << r.bound << "...\n";
      break;
  }
}

void PrintTables(std::ostream& out, const std::vector<TableRow>& rows,
                 Format format, bool exact) {
  switch (format) {
    case Format::kTsv:
      out << "plan\tdimension\tsize-digits\tbound\ttable\texpected\tstatus";
      if (exact) out << "\tsize";
      out << '\n';
      for (const auto& row : rows) {
        out << row.label << '\t' << row.report.dimension << '\t'
            << DecimalDigitCount(row.report.size) << '\t' << row.report.bound
            << '\t' << row.table << '\t' << row.expected << '\t'
            << (row.Matches() ? "match" : "MISMATCH");
        if (exact) out << '\t' << row.report.size.str();
        out << '\n';
      }
      break;
    case Format::kJson: {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json j{{"table", row.table},
                         {"construction", row.construction},
                         {"plan", row.label},
                         {"dimension", row.report.dimension},
                         {"size_digits", DecimalDigitCount(row.report.size)},
                         {"bound", row.report.bound},
                         {"expected", row.expected},
                         {"match", row.Matches()}};
        if (exact) j["size"] = row.report.size.str();
        all.push_back(j);
      }
      out << all.dump(2) << '\n';
      break;
    }
    case Format::kHuman: {
      std::string table;
      for (const auto& row : rows) {
        if (row.table != table) {
          table = row.table;
          out << "# " << table << '\n';
        }
        out << std::setw(9) << row.report.dimension << "  " << row.report.bound
            << "  expected " << std::left << std::setw(10) << row.expected
            << std::right << ' ' << std::setw(8)
            << (row.Matches() ? "match" : "MISMATCH") << "  "
            << row.construction << '\n';
      }
      break;
    }
  }
}

ExtendableTriple LoadTriple(const std::vector<std::string>& spec) {
  if (spec.size() == 1 && spec[0] == "edel6") return BuildEdel6();
  if (spec.size() == 3) {
    return ExtendableTriple::Certify(ReadVectors(spec[0]), ReadVectors(spec[1]),
                                     ReadVectors(spec[2]));
  }
  throw UsageError("--triple takes 'edel6' or three cap-set files");
}

// Everything the subcommands read, filled by CLI11.
struct Options {
  std::vector<std::string> files;
  bool recursive = false;
  std::vector<int> constant_weight;
  int m = 0;
  int w = 0;
  std::string output;
  std::vector<std::string> triple;
  bool count_only = false;
  std::string plan_file;
  int digits = kDefaultDigits;
  bool exact = false;
  std::string format = "human";
  std::int64_t n = 0;
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::string profile = "none";
  std::string model_file;
  std::vector<int> instance;
  std::uint64_t node_budget = 50'000'000;
  std::uint64_t seed = 0;
};

int VerifyCap(const Options& o, std::ostream& out) {
  const VectorSet s = ReadVectors(o.files.at(0));
  out << s.size() << " vectors in F_3^" << s.dimension() << '\n';
  return Report(out, "cap set", IsCapSet(s));
}

int VerifyAdmissible(const Options& o, std::ostream& out) {
  const ParsedSet parsed = ReadSetFile(o.files.at(0));
  const VectorSet& s = parsed.set;
  out << s.size() << " vectors in {0,1,2}^" << s.dimension() << '\n';
  int code = Report(out, "admissible", IsAdmissible(s));
  if (o.recursive && code == kExitOk) {
    code = Report(out, "recursively admissible", IsRecursivelyAdmissible(s));
  }
  if (!o.constant_weight.empty() && code == kExitOk) {
    const int m = o.constant_weight[0], w = o.constant_weight[1];
    code = Report(out,
                  "I(" + std::to_string(m) + "," + std::to_string(w) + ")",
                  IsConstantWeight(s, m, w));
  }
  return code;
}

int VerifyExtendable(const Options& o, std::ostream& out) {
  const VectorSet a0 = ReadVectors(o.files.at(0));
  const VectorSet a1 = ReadVectors(o.files.at(1));
  const VectorSet a2 = ReadVectors(o.files.at(2));
  out << "|A0|=" << a0.size() << " |A1|=" << a1.size() << " |A2|=" << a2.size()
      << " in F_3^" << a0.dimension() << '\n';
  return Report(out, "extendable", IsExtendable(a0, a1, a2));
}

int VerifyMeta(const Options& o, std::ostream& out) {
  const VectorSet s0 = ReadVectors(o.files.at(0));
  const VectorSet s1 = ReadVectors(o.files.at(1));
  const VectorSet s2 = ReadVectors(o.files.at(2));
  out << "|S0|=" << s0.size() << " |S1|=" << s1.size() << " |S2|=" << s2.size()
      << " of length " << s0.dimension() << '\n';
  return Report(out, "meta-extendable", IsMetaExtendable(s0, s1, s2));
}

int BuildEdel6Command(const Options& o, std::ostream& out) {
  const ExtendableTriple t = BuildEdel6();
  out << "edel6: |A0|=" << t.a0().size() << " |A1|=" << t.a1().size()
      << " |A2|=" << t.a2().size() << " |A1 n A2|="
      << Intersection(t.a1(), t.a2()).size() << ", extendable ("
      << ProvenanceName(t.provenance()) << ")\n";
  for (int k = 0; k < 3; ++k) {
    if (o.output.empty()) {
      out << "# A" << k << '\n';
      WriteSet(out, t.set(k));
    } else {
      WriteOrPrint(out, o.output + ".a" + std::to_string(k), t.set(k), false);
    }
  }
  return kExitOk;
}

int BuildPatternCommand(const PatternSet& p, const Options& o,
                        std::ostream& out) {
  if (!o.output.empty()) {
    out << "I(" << p.length() << "," << p.weight().value_or(-1)
        << "): " << p.size() << " vectors, verified\n";
  }
  WriteOrPrint(out, o.output, p.elements(), true);
  return kExitOk;
}

int ExtendCommand(const Options& o, std::ostream& out) {
  const VectorSet s = ReadVectors(o.files.at(0));
  const ExtendableTriple triple = LoadTriple(o.triple);
  ElementBudget budget = DefaultElementBudget();
  if (o.count_only) budget.max_elements = 0;
  const ExtendedProduct p = ExtendProduct(s, triple, budget);
  out << "extended product: dimension " << p.dimension << ", size "
      << p.size.str() << '\n';
  if (o.count_only) return kExitOk;
  if (!p.elements) {
    throw BudgetExceeded("extended product of size " + p.size.str() +
                             " exceeds the element budget; use --count-only",
                         p.size.str());
  }
  WriteOrPrint(out, o.output, *p.elements, false);
  return kExitOk;
}

int BoundPlanCommand(const Options& o, std::ostream& out) {
  std::ifstream in(o.plan_file);
  if (!in) throw ParseError("cannot open " + o.plan_file);
  std::stringstream text;
  text << in.rdbuf();
  PrintBound(out, BoundForPlan(ParsePlan(text.str()), o.digits),
             ParseFormat(o.format), o.exact);
  return kExitOk;
}

int BoundTablesCommand(const Options& o, std::ostream& out) {
  PrintTables(out, ReproduceTables(o.digits), ParseFormat(o.format), o.exact);
  return kExitOk;
}

int BoundLimitCommand(const Options& o, std::ostream& out) {
  const LimitReport r = AsymptoticLimit(o.n, o.a0, o.a1, o.digits);
  switch (ParseFormat(o.format)) {
    case Format::kTsv:
      out << "alpha\tlimit\n" << r.alpha.ToString() << '\t' << r.limit << '\n';
      break;
    case Format::kJson:
      out << nlohmann::json{{"alpha", r.alpha.ToString()}, {"limit", r.limit}}
                 .dump(2)
          << '\n';
      break;
    case Format::kHuman:
      out << "alpha  " << r.alpha.ToString() << '\n'
          << "limit  " << r.limit << "...\n";
      break;
  }
  return kExitOk;
}

int SatEncodeCommand(const Options& o, std::ostream& out) {
  const Encoding e = Encode(o.m, o.w, ParseProfile(o.profile));
  if (o.output.empty()) {
    EmitDimacs(out, e);
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw ParseError("cannot write " + o.output);
  EmitDimacs(file, e);
  out << "wrote " << e.formula.num_vars << " variables, "
      << e.formula.clauses.size() << " clauses to " << o.output << '\n';
  return kExitOk;
}

int SatDecodeCommand(const Options& o, std::ostream& out) {
  std::ifstream in(o.model_file);
  if (!in) throw ParseError("cannot open " + o.model_file);
  const SolverResult result = ParseSolverOutput(in);
  if (result.status == SolverResult::Status::kUnsatisfiable) {
    out << "solver reported UNSATISFIABLE: no I(" << o.instance[0] << ","
        << o.instance[1] << ") under this encoding\n";
    return kExitVerificationFailed;
  }
  if (result.status == SolverResult::Status::kUnknown) {
    throw UsageError("solver output reports an unknown status");
  }
  const VarMap map(o.instance[0], o.instance[1]);
  try {
    const PatternSet p = DecodeModel(result.model, map);
    if (!o.output.empty()) {
      out << "decoded I(" << map.m() << "," << map.w() << "): " << p.size()
          << " vectors, verified\n";
    }
    WriteOrPrint(out, o.output, p.elements(), true);
  } catch (const EncoderBugError& e) {
    out << "decoded model failed verification: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int SatOracleCommand(const Options& o, std::ostream& out) {
  const OracleResult r = BruteForceAdmissible(o.m, o.w, o.node_budget);
  out << "I(" << o.m << "," << o.w << "): " << OutcomeName(r.outcome) << " ("
      << r.nodes << " nodes"
      << (r.exhaustive_regime ? ", exhaustive regime" : "") << ")\n";
  if (r.set && !o.output.empty()) {
    WriteOrPrint(out, o.output, r.set->elements(), true);
  }
  return kExitOk;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Cap-set construction, certification and bound toolkit",
               "capset"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(Version()));
  Options o;
  std::function<int()> action;
  auto on = [&](CLI::App* cmd, std::function<int(const Options&,
                                                  std::ostream&)> run) {
    cmd->callback([&, run] { action = [&, run] { return run(o, out); }; });
  };
  app.add_option("--seed", o.seed, "Reserved; every algorithm is deterministic");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Check a property by brute force");
  verify->require_subcommand(1);
  CLI::App* vcap = verify->add_subcommand("cap", "Cap-set check");
  vcap->add_option("file", o.files)->required()->expected(1);
  on(vcap, VerifyCap);
  CLI::App* vadm = verify->add_subcommand("admissible", "Admissible-set check");
  vadm->add_option("file", o.files)->required()->expected(1);
  vadm->add_flag("--recursive", o.recursive, "Also check recursive admissibility");
  vadm->add_option("--constant-weight", o.constant_weight,
                   "Also check that the set is I(m,w)")
      ->expected(2);
  on(vadm, VerifyAdmissible);
  CLI::App* vext = verify->add_subcommand("extendable", "Extendable-triple check");
  vext->add_option("files", o.files, "a0 a1 a2")->required()->expected(3);
  on(vext, VerifyExtendable);
  CLI::App* vmeta = verify->add_subcommand("meta", "Meta-extendable check");
  vmeta->add_option("files", o.files, "s0 s1 s2")->required()->expected(3);
  on(vmeta, VerifyMeta);

  // build
  CLI::App* build = app.add_subcommand("build", "Construct a certified set");
  build->require_subcommand(1);
  CLI::App* bedel = build->add_subcommand("edel6", "The extendable triple in F_3^6");
  bedel->add_option("-o,--output", o.output, "Output prefix (.a0/.a1/.a2)");
  on(bedel, BuildEdel6Command);
  CLI::App* bchain = build->add_subcommand("chain", "Recursively admissible I~(m,m-1)");
  bchain->add_option("m", o.m)->required();
  bchain->add_option("-o,--output", o.output);
  on(bchain, [](const Options& opt, std::ostream& os) {
    return BuildPatternCommand(BuildChain(opt.m), opt, os);
  });
  CLI::App* blow = build->add_subcommand("lowweight", "I(m,w) for w = 2 or 3");
  blow->add_option("m", o.m)->required();
  blow->add_option("w", o.w)->required();
  blow->add_option("-o,--output", o.output);
  on(blow, [](const Options& opt, std::ostream& os) {
    return BuildPatternCommand(BuildLowWeight(opt.m, opt.w), opt, os);
  });

  // extend
  CLI::App* extend = app.add_subcommand("extend", "Extended product of a triple");
  extend->add_option("file", o.files, "Admissible set")->required()->expected(1);
  extend->add_option("--triple", o.triple, "edel6 or three cap-set files")
      ->required()
      ->expected(1, 3);
  auto* out_opt = extend->add_option("-o,--output", o.output);
  extend->add_flag("--count-only", o.count_only)->excludes(out_opt);
  on(extend, ExtendCommand);

  // bound
  CLI::App* bound = app.add_subcommand("bound", "Exact sizes and n-th root bounds");
  bound->require_subcommand(1);
  for (CLI::App* sub : {bound->add_subcommand("plan", "Bound for a plan file"),
                        bound->add_subcommand("tables", "Reproduce the bound tables"),
                        bound->add_subcommand("limit", "Asymptotic limit")}) {
    sub->add_option("--digits", o.digits, "Significant digits")
        ->check(CLI::Range(1, 10000));
    sub->add_option("--format", o.format, "human, tsv or json")
        ->check(CLI::IsMember({"human", "tsv", "json"}));
    sub->add_flag("--exact", o.exact, "Print the full decimal size");
  }
  CLI::App* bplan = bound->get_subcommand("plan");
  bplan->add_option("planfile", o.plan_file)->required();
  on(bplan, BoundPlanCommand);
  on(bound->get_subcommand("tables"), BoundTablesCommand);
  CLI::App* blimit = bound->get_subcommand("limit");
  blimit->add_option("n", o.n)->required();
  blimit->add_option("a0", o.a0)->required();
  blimit->add_option("a1", o.a1)->required();
  on(blimit, BoundLimitCommand);

  // sat
  CLI::App* sat = app.add_subcommand("sat", "CNF instances for I(m,w)");
  sat->require_subcommand(1);
  CLI::App* senc = sat->add_subcommand("encode", "Emit DIMACS");
  senc->add_option("m", o.m)->required();
  senc->add_option("w", o.w)->required();
  senc->add_option("--profile", o.profile, "none, i11_7, i11_6 or i10_6");
  senc->add_option("-o,--output", o.output);
  on(senc, SatEncodeCommand);
  CLI::App* sdec = sat->add_subcommand("decode", "Decode a solver model");
  sdec->add_option("model", o.model_file)->required();
  sdec->add_option("--instance", o.instance, "m w")->required()->expected(2);
  sdec->add_option("-o,--output", o.output);
  on(sdec, SatDecodeCommand);
  CLI::App* sorc = sat->add_subcommand("oracle", "Brute-force existence check");
  sorc->add_option("m", o.m)->required();
  sorc->add_option("w", o.w)->required();
  sorc->add_option("--budget", o.node_budget, "Search node budget");
  sorc->add_option("-o,--output", o.output);
  on(sorc, SatOracleCommand);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const CertificationError& e) {
    out << "certification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace capset::cli
