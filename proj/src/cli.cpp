#include "jacobi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "jacobi/audit.hpp"
#include "jacobi/json_io.hpp"

namespace jacobi::cli {

namespace {

using io::json;

struct Options {
  SamplerConfig audit;
  double tol = 1e-9;
  std::string format = "json";
  std::string output;
  bool fail_on_flag = false;
  std::vector<std::string> payloads;
};

struct Result {
  json value;
  std::string text;  // rendering for --format text; empty means the JSON dump
  int code = kOk;
};

using Handler = std::function<Result(const Options&)>;

std::vector<json> parse_payloads(const Options& o, std::size_t expected) {
  if (o.payloads.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " JSON argument(s), got " +
                     std::to_string(o.payloads.size()));
  std::vector<json> out;
  for (const auto& p : o.payloads) out.push_back(io::parse_json(p));
  return out;
}

std::complex<double> decode_complex_double(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
      !j["im"].is_number())
    throw ParseError("expected {\"re\": number, \"im\": number}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

json encode_complex_double(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string render_alg(const JacobiAlgElem& v) {
  return "G(" + v.x.str() + ", " + v.y.str() + ", " + v.z.str() + ", " + v.p.str() + ", " +
         v.q.str() + ", " + v.r.str() + ")";
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"classify",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         const auto label = real::classify(io::decode_alg(a[0]));
         return Result{io::encode(label), real::render_text(label)};
       }},
      {"invariants",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         return Result{io::encode(invariants(io::decode_alg(a[0]))), ""};
       }},
      {"bracket",
       [](const Options& o) {
         const auto a = parse_payloads(o, 2);
         const auto v = bracket(io::decode_alg(a[0]), io::decode_alg(a[1]));
         return Result{io::encode(v), render_alg(v)};
       }},
      {"adjoint",
       [](const Options& o) {
         const auto a = parse_payloads(o, 2);
         const auto v = adjoint(io::decode_group(a[0]), io::decode_alg(a[1]));
         return Result{io::encode(v), render_alg(v)};
       }},
      {"mul",
       [](const Options& o) {
         const auto a = parse_payloads(o, 2);
         return Result{io::encode(group_mul(io::decode_group(a[0]), io::decode_group(a[1]))), ""};
       }},
      {"inv",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         return Result{io::encode(group_inv(io::decode_group(a[0]))), ""};
       }},
      {"embed",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         json rows = json::array();
         auto dump = [&rows](const Mat4<Rational>& m) {
           for (std::size_t i = 0; i < 4; ++i) {
             json row = json::array();
             for (std::size_t j = 0; j < 4; ++j) row.push_back(io::encode(m(i, j)));
             rows.push_back(row);
           }
         };
         // Group elements carry "a"; everything else is read as an algebra element.
         if (a[0].is_object() && a[0].contains("a"))
           dump(embed_group(io::decode_group(a[0])));
         else
           dump(embed_algebra(io::decode_alg(a[0])));
         return Result{rows, ""};
       }},
      {"witness",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         return Result{io::encode(real::witness(io::decode_alg(a[0]), o.tol)), ""};
       }},
      {"dim",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         const auto d = orbit_dimension(io::decode_alg(a[0]));
         return Result{json{{"dimension", d}}, std::to_string(d)};
       }},
      {"classify-sl2",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         const auto label = sl2::classify_sl2(io::decode_sl2(a[0]));
         return Result{io::encode(label), sl2::render_text(label)};
       }},
      {"ks-complete",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         return Result{io::encode(sl2::sl2_triple_through(io::decode_sl2(a[0]))), ""};
       }},
      {"cayley",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         return Result{io::encode(sl2::cayley(io::decode_real_triple(a[0]))), ""};
       }},
      {"ks-map",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         const auto label = sl2::ks_map(io::decode_sl2_label(a[0]));
         return Result{io::encode(label), sl2::render_text(label)};
       }},
      {"classify-kc",
       [](const Options& o) {
         const auto a = parse_payloads(o, 1);
         const auto label = complex::classify_kc(io::decode_pc(a[0]));
         return Result{io::encode(label), complex::render_text(label)};
       }},
      {"same-orbit-kc",
       [](const Options& o) {
         const auto a = parse_payloads(o, 2);
         const auto d = complex::same_kc_orbit(io::decode_pc(a[0]), io::decode_pc(a[1]));
         return Result{io::encode(d), d.same ? "same orbit" : "different orbits"};
       }},
      {"act-sj",
       [](const Options& o) {
         const auto a = parse_payloads(o, 2);
         const auto g = io::decode_group(a[0]);
         if (!a[1].is_object() || !a[1].contains("tau") || !a[1].contains("zeta"))
           throw ParseError("expected {\"tau\": .., \"zeta\": ..}");
         const SiegelJacobiPoint pt(decode_complex_double(a[1]["tau"]),
                                    decode_complex_double(a[1]["zeta"]));
         const auto moved = sj_action(g, pt);
         return Result{{{"tau", encode_complex_double(moved.tau())},
                        {"zeta", encode_complex_double(moved.zeta())}},
                       ""};
       }},
      {"audit",
       [](const Options& o) {
         parse_payloads(o, 0);
         const auto records = audit::run_audit(o.audit);
         const bool flagged = std::any_of(records.begin(), records.end(), [](const auto& r) {
           return r.status == audit::Status::Flag;
         });
         return Result{audit::report_json(records, o.audit), audit::report_text(records),
                       flagged && o.fail_on_flag ? kFlagged : kOk};
       }},
  };
  return table;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact adjoint-orbit computations for the Jacobi group"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opts.audit.seed, "audit seed");
  app.add_option("--trials", opts.audit.trials, "audit trials per claim");
  app.add_option("--height-bound", opts.audit.height_bound, "max numerator/denominator of sampled rationals");
  app.add_option("--tol", opts.tol, "residual tolerance for float witnesses");
  app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", opts.output, "write the result to this file");
  app.add_flag("--fail-on-flag", opts.fail_on_flag, "exit 3 when the audit reports FLAG records");

  std::string command;
  for (const auto& [name, handler] : handlers()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("payload", opts.payloads, "JSON arguments");
    sub->callback([&command, name = name] { command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "ParseError", e.what());
    return kInputError;
  }

  try {
    const Result result = handlers().at(command)(opts);
    std::string rendered = (opts.format == "text" && !result.text.empty()) ? result.text : result.value.dump();
    if (rendered.empty() || rendered.back() != '\n') rendered += "\n";
    if (opts.output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(opts.output, std::ios::binary);
      if (!file) {
        report_error(err, "ParseError", "cannot open output file " + opts.output);
        return kInputError;
      }
      file << rendered;
    }
    return result.code;
  } catch (const InputError& e) {
    report_error(err, e.code(), e.what());
    return kInputError;
  } catch (const DomainError& e) {
    report_error(err, e.code(), e.what());
    return kDomainError;
  } catch (const InternalInconsistency& e) {
    report_error(err, e.code(), e.what());
    return kInternal;
  }
}

}  // namespace jacobi::cli
