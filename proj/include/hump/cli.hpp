#pragma once

// Command-line front end, kept in a header so tests can drive it in-process.
//
//   humpctl triangle <hm|pm|s|mp> [--backend enum|formula|series] [--n-max N] [--format csv|json]
//   humpctl verify <identity|all> [--n-max N]
//   humpctl bijection <map> --input X [--inverse] [--hump I] [--n N] [--k K] [--trace]
//   humpctl figures
//
// Exit status: 0 success, 1 usage or domain error, 2 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hump/bijections.hpp"
#include "hump/error.hpp"
#include "hump/io.hpp"
#include "hump/path_core.hpp"
#include "hump/tables.hpp"
#include "hump/verify.hpp"

namespace hump::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification_failed = 2;

inline constexpr int default_cli_cap = 14;
inline constexpr const char* cap_env_var = "HUMP_ENUM_CAP";

/// --cap wins over HUMP_ENUM_CAP, which wins over the built-in default.
inline int resolve_cap(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(cap_env_var)) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      fail(errc::domain, std::string(cap_env_var) + " is not an integer: " + env);
    }
  }
  return default_cli_cap;
}

inline std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity << " n=" << r.n_from << ".." << r.n_to << " k=" << r.k_range << " cases=" << r.cases << ": ";
  if (r.passed()) {
    os << "PASS";
  } else {
    const auto& c = *r.counterexample;
    os << "FAIL at " << c.inputs << ": " << c.lhs << " != " << c.rhs;
  }
  return os.str();
}

namespace detail {

struct BijectionArgs {
  std::string map;
  std::string input;
  bool inverse = false;
  bool trace = false;
  std::optional<std::size_t> hump;
  std::optional<int> n;
  std::optional<int> k;
};

inline std::string humped_text(const HumpedPath& hp) {
  return hp.path.str() + " --hump " + std::to_string(hp.hump.up_index);
}

inline ordered_json humped_json(const HumpedPath& hp) {
  return ordered_json{{"path", hp.path.str()}, {"hump", hp.hump.up_index}};
}

inline HumpedPath humped_input(const BijectionArgs& a) {
  require(a.hump.has_value(), errc::domain, "--hump INDEX is required for this map");
  return HumpedPath::at(parse_path(a.input), *a.hump);
}

inline int required(const std::optional<int>& v, const char* flag) {
  require(v.has_value(), errc::domain, std::string(flag) + " is required for this inverse");
  return *v;
}

inline void emit_word(std::ostream& out, const BijectionArgs& a, const Traced<PathWord>& t) {
  out << t.value.str() << '\n';
  if (a.trace) out << trace_json(a.input, t.value.str(), t.trace).dump() << '\n';
}

inline void emit_humped(std::ostream& out, const BijectionArgs& a, const Traced<HumpedPath>& t) {
  out << humped_text(t.value) << '\n';
  if (a.trace) out << trace_json(a.input, humped_json(t.value), t.trace).dump() << '\n';
}

inline void run_bijection(std::ostream& out, const BijectionArgs& a) {
  const auto& m = a.map;
  if (m == "psi" || m == "psi-star") {
    const bool star = m == "psi-star";
    if (a.inverse) {
      const auto w = parse_path(a.input);
      emit_humped(out, a, star ? psi_star_inverse_traced(w) : psi_inverse_traced(w));
    } else {
      const auto hp = humped_input(a);
      emit_word(out, a, star ? psi_star_forward_traced(hp) : psi_forward_traced(hp));
    }
  } else if (m == "rho1") {
    const auto w = parse_path(a.input);
    emit_word(out, a, a.inverse ? rho1_inverse_traced(w, required(a.n, "--n")) : rho1_forward_traced(w));
  } else if (m == "rho2") {
    const auto w = parse_path(a.input);
    emit_word(out, a, a.inverse ? rho2_inverse_traced(w, required(a.k, "--k")) : rho2_forward_traced(w));
  } else if (m == "phi") {
    if (a.inverse) {
      const auto t = phi_inverse_traced(parse_path(a.input));
      out << to_json(t.value).dump() << '\n';
      if (a.trace) out << trace_json(a.input, to_json(t.value), t.trace).dump() << '\n';
    } else {
      emit_word(out, a, phi_forward_traced(tableau_from_json(a.input)));
    }
  } else if (m == "varphi") {
    const auto w = parse_path(a.input);
    emit_word(out, a, a.inverse ? varphi_inverse_traced(w) : varphi_forward_traced(w));
  } else if (m == "cap-phi") {
    if (a.inverse) {
      const auto t = tableau_from_json(a.input);
      const auto word = phi_forward_traced(t);
      const auto mid = varphi_forward_traced(word.value);
      const auto last = psi_inverse_traced(mid.value);
      out << humped_text(last.value) << '\n';
      if (a.trace) {
        ordered_json j{{"input", a.input}, {"output", humped_json(last.value)}};
        j["stages"] = ordered_json::array(
            {{{"map", "phi"}, {"input", to_json(t)}, {"output", word.value.str()}, {"segments", to_json(word.trace)}},
             {{"map", "varphi"}, {"input", word.value.str()}, {"output", mid.value.str()}, {"segments", to_json(mid.trace)}},
             {{"map", "psi^-1"}, {"input", mid.value.str()}, {"output", humped_json(last.value)}, {"segments", to_json(last.trace)}}});
        out << j.dump() << '\n';
      }
    } else {
      const auto hp = humped_input(a);
      const auto st = cap_phi_forward_stages(hp);
      out << to_json(st.phi.value).dump() << '\n';
      if (a.trace) {
        ordered_json j{{"input", humped_json(hp)}, {"output", to_json(st.phi.value)}};
        j["stages"] = ordered_json::array(
            {{{"map", "psi"}, {"input", humped_json(hp)}, {"output", st.psi.value.str()}, {"segments", to_json(st.psi.trace)}},
             {{"map", "varphi^-1"}, {"input", st.psi.value.str()}, {"output", st.varphi.value.str()}, {"segments", to_json(st.varphi.trace)}},
             {{"map", "phi^-1"}, {"input", st.varphi.value.str()}, {"output", to_json(st.phi.value)}, {"segments", to_json(st.phi.trace)}}});
        out << j.dump() << '\n';
      }
    }
  } else if (m == "f") {
    const auto w = parse_path(a.input);
    emit_word(out, a, a.inverse ? f_step_inverse_traced(w, required(a.n, "--n")) : f_step_forward_traced(w));
  } else if (m == "move-flat") {
    const auto w = parse_path(a.input);
    emit_word(out, a, a.inverse ? move_flat_inverse_traced(w) : move_flat_traced(w));
  } else {
    fail(errc::domain, "unknown map '" + m + "'");
  }
}

/// The worked examples of the psi and Phi figures, step by step.
inline void run_figures(std::ostream& out) {
  const auto hp = HumpedPath::at(parse_path("UFUFFDDUD"), 2);
  const auto st = cap_phi_forward_stages(hp);
  out << "(M,P)        " << humped_text(hp) << '\n';
  out << "psi          " << st.psi.value.str() << '\n';
  out << "varphi^-1    " << st.varphi.value.str() << '\n';
  out << "phi^-1       " << to_json(st.phi.value).dump() << '\n';
  out << "psi*         " << psi_star_forward(hp).str() << '\n';
  out << render_text(st.phi.value);
}

}  // namespace detail

/// Runs the CLI on `args` (program name excluded) and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Humps of Motzkin paths and (2,1)-hook tableaux", "humpctl"};
  app.require_subcommand(1);
  std::optional<int> cap_flag;
  app.add_option("--cap", cap_flag, "enumeration cap (default 14, or $HUMP_ENUM_CAP)");

  auto* tri = app.add_subcommand("triangle", "print a triangle of counts");
  std::string kind_text, backend_text = "enum", format = "csv", out_file;
  std::optional<int> n_max;
  tri->add_option("kind", kind_text, "hm | pm | s | mp")->required();
  tri->add_option("--backend", backend_text, "enum | formula | series");
  tri->add_option("--n-max", n_max, "largest order (default 10 for enum, 40 otherwise)");
  tri->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  tri->add_option("--out", out_file, "write to FILE instead of standard output");

  auto* ver = app.add_subcommand("verify", "check an identity exhaustively");
  std::string identity;
  std::optional<int> verify_n_max;
  ver->add_option("identity", identity, "identity name or 'all'")->required();
  ver->add_option("--n-max", verify_n_max, "largest order checked");

  auto* bij = app.add_subcommand("bijection", "apply one of the bijections");
  detail::BijectionArgs b;
  bij->add_option("map", b.map, "psi | psi-star | rho1 | rho2 | phi | varphi | cap-phi | f | move-flat")->required();
  bij->add_option("--input", b.input, "path word, or tableau JSON for phi / cap-phi --inverse")->required();
  bij->add_flag("--inverse", b.inverse, "apply the inverse map");
  bij->add_flag("--trace", b.trace, "also print the decomposition as JSON");
  bij->add_option("--hump", b.hump, "0-based index of the hump's up step");
  bij->add_option("--n", b.n, "target order (rho1 and f inverses)");
  bij->add_option("--k", b.k, "source half-height k (rho2 inverse)");

  auto* fig = app.add_subcommand("figures", "print the worked psi / Phi example");

  std::vector<std::string> storage{"humpctl"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const int cap = resolve_cap(cap_flag);
    if (tri->parsed()) {
      const auto kind = parse_table_kind(kind_text);
      const auto backend = parse_backend(backend_text);
      if (!kind || !backend || !backend_available(*kind, *backend)) {
        err << "error: unsupported triangle/backend combination '" << kind_text << "' / '" << backend_text << "'\n";
        return exit_usage;
      }
      const int n = n_max.value_or(*backend == Backend::enumeration ? 10 : 40);
      const auto table = make_table(*kind, *backend, n, cap);
      const auto text = format == "json" ? table.to_json() : table.to_csv();
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
          err << "error: cannot open " << out_file << '\n';
          return exit_usage;
        }
        f << text;
      }
      return exit_ok;
    }
    if (ver->parsed()) {
      std::vector<const IdentitySpec*> chosen;
      if (identity == "all") {
        for (const auto& spec : identity_registry()) chosen.push_back(&spec);
      } else if (const auto* spec = find_identity(identity)) {
        chosen.push_back(spec);
      } else {
        err << "error: unknown identity '" << identity << "'\n";
        return exit_usage;
      }
      bool ok = true;
      for (const auto* spec : chosen) {
        const auto report = spec->run(verify_n_max.value_or(spec->default_n_max), cap);
        out << format_report(report) << '\n';
        ok = ok && report.passed();
      }
      return ok ? exit_ok : exit_verification_failed;
    }
    if (bij->parsed()) {
      detail::run_bijection(out, b);
      return exit_ok;
    }
    if (fig->parsed()) {
      detail::run_figures(out);
      return exit_ok;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace hump::cli
