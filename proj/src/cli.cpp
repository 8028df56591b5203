#include "pnc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <random>
#include <sstream>

#include "pnc/enumerate.hpp"
#include "pnc/json_io.hpp"

namespace pnc {

namespace {

json parse_arg_json(const std::string& text) {
  return json::parse(text);
}

// Inline JSON when the argument looks like JSON, file contents otherwise.
json load_json_argument(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) fail(Errc::UsageError, "cannot open file: " + arg);
  json j;
  in >> j;
  return j;
}

struct SelftestInstance {
  const char* name;
  GenericSeries series;
};

std::vector<SelftestInstance> selftest_corpus() {
  auto series = [](std::initializer_list<std::pair<Rational, Rational>> body,
                   Rational r) {
    std::map<Rational, Rational> m;
    for (const auto& [e, c] : body) m.emplace(e, c);
    return make_series(std::move(m), std::move(r));
  };
  std::vector<SelftestInstance> out;
  out.push_back({"cusp", series({{rat(3, 2), rat(1)}}, rat(-1))});
  out.push_back({"nonalgebraic",
                 series({{rat(4, 3), rat(1)}, {rat(-22, 9), rat(1, 3)}}, rat(-3))});
  out.push_back({"weighted23", series({}, rat(3, 2))});
  out.push_back({"halfslot", series({{rat(3, 2), rat(1)}, {rat(-1, 2), rat(1)}}, rat(-1))});
  out.push_back({"two-pair", series({{rat(3, 2), rat(1)}, {rat(-3, 4), rat(1)}}, rat(-2))});
  out.push_back({"deep", series({{rat(3, 2), rat(1)}, {rat(1, 4), rat(5)}}, rat(1, 8))});
  return out;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly f;
  std::uniform_int_distribution<long long> nterms(1, 6), coef(-5, 5), ex(-4, 6),
      ey(0, 5);
  long long terms = nterms(rng);
  for (long long i = 0; i < terms; ++i)
    f.add_term(ex(rng), ey(rng), Rational(coef(rng)));
  if (f.is_zero()) f = LaurentPoly::constant(Rational(1));
  return f;
}

int run_selftest(std::ostream& out) {
  long long checks = 0;
  std::mt19937_64 rng(20240817);
  for (const SelftestInstance& inst : selftest_corpus()) {
    SeriesKeyData kd = key_data_from_series(inst.series);

    // Basis-expansion semidegree against the substitution semidegree.
    for (int i = 0; i < 25; ++i) {
      LaurentPoly f = random_poly(rng);
      if (semidegree(f, kd.kf) != semidegree_via_series(f, inst.series))
        fail(Errc::InternalError,
             std::string("semidegree oracle mismatch on instance ") + inst.name);
      ++checks;
    }

    // Canonical cross-check for primitive instances.
    if (is_primitive(kd.omega)) {
      LaurentPoly d = kd.kf.g.back().dy();
      long long rhs =
          -(kd.omega[0] + kd.omega.last() + 1 - semidegree(d, kd.kf));
      if (canonical_coefficient(kd.omega) != rhs)
        fail(Errc::InternalError,
             std::string("canonical cross-check failed on instance ") + inst.name);
      ++checks;
    }

    // Clause check against the omega-hat reformulation.
    FormalPairs fp = formal_pairs_from_key_sequence(kd.omega);
    if (normal_form_check(kd.omega).ok != normal_form_equiv(kd.omega, fp))
      fail(Errc::InternalError,
           std::string("normal-form equivalence failed on instance ") + inst.name);
    ++checks;
  }
  out << json{{"selftest", "ok"}, {"checks", checks}} << "\n";
  return 0;
}

EnumFilters parse_filters(const std::vector<std::string>& names) {
  EnumFilters f;
  for (const std::string& raw : names) {
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      if (item == "primitive") f.primitive = true;
      else if (item == "algebraic") f.algebraic = true;
      else if (item == "non-algebraic") f.non_algebraic = true;
      else if (item == "normal") f.normal = true;
      else if (item == "essential") f.essential = true;
      else if (item == "gorenstein") f.gorenstein = true;
      else if (item == "rational") f.rational = true;
      else fail(Errc::UsageError, "unknown filter: " + item);
    }
  }
  return f;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact invariants of primitive normal compactifications of the plane"};
  app.require_subcommand(1);

  std::string omega_arg, theta_arg = "[]", poly_arg, series_arg;
  long long bound = 12;
  long long max_entry = 10;
  int max_length = 4;
  int jobs = 1;
  std::vector<std::string> filter_args;
  bool essential_mode = false, curve_mode = false;

  auto add_omega = [&](CLI::App* cmd) {
    cmd->add_option("--omega", omega_arg, "key sequence, e.g. '[2,3,1]'")->required();
  };

  CLI::App* c_validate = app.add_subcommand("validate", "classify an integer sequence");
  add_omega(c_validate);

  CLI::App* c_keyforms = app.add_subcommand("keyforms", "build the key forms of (omega, theta)");
  add_omega(c_keyforms);
  c_keyforms->add_option("--theta", theta_arg, "theta values, e.g. '[1]' or '[[1,2]]'");

  CLI::App* c_semideg = app.add_subcommand("semidegree", "evaluate the semidegree of a polynomial");
  add_omega(c_semideg);
  c_semideg->add_option("--theta", theta_arg, "theta values");
  c_semideg->add_option("--poly", poly_arg, "polynomial JSON or file")->required();

  CLI::App* c_classify = app.add_subcommand("classify", "singularity report");
  add_omega(c_classify);

  CLI::App* c_equations = app.add_subcommand("equations", "weighted projective embedding equations");
  add_omega(c_equations);
  c_equations->add_option("--theta", theta_arg, "theta values");

  CLI::App* c_curve = app.add_subcommand("curve-infinity", "curve-at-infinity semigroup data");
  add_omega(c_curve);

  CLI::App* c_aut = app.add_subcommand("aut", "automorphism group descriptor");
  add_omega(c_aut);

  CLI::App* c_moduli = app.add_subcommand("moduli", "moduli-space report");
  add_omega(c_moduli);
  c_moduli->add_flag("--essential", essential_mode, "essential-family moduli");
  c_moduli->add_flag("--curve", curve_mode, "curve moduli for a delta sequence");

  CLI::App* c_g2a = app.add_subcommand("g2a", "additive-group action criteria");
  add_omega(c_g2a);

  CLI::App* c_norm = app.add_subcommand("normalize", "normalize a generic series");
  c_norm->add_option("--series", series_arg, "series JSON or file")->required();

  CLI::App* c_brenton = app.add_subcommand("brenton", "Gorenstein p_g=0 enumeration");
  c_brenton->add_option("--bound", bound, "entry bound (>= 6)");

  CLI::App* c_enum = app.add_subcommand("enumerate", "stream key sequences within bounds");
  c_enum->add_option("--max-entry", max_entry, "largest |omega_i|");
  c_enum->add_option("--max-length", max_length, "largest n+2");
  c_enum->add_option("--filter", filter_args, "comma-separated filters");
  c_enum->add_option("--jobs", jobs, "worker threads for the omega_0 strata");

  CLI::App* c_selftest = app.add_subcommand("selftest", "run the built-in cross-oracle suites");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_validate->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      out << to_json(validate(w.w)) << "\n";
    } else if (c_keyforms->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      ThetaVector th = theta_from_json(parse_arg_json(theta_arg));
      KeyFormSet kf = build_key_forms(w, th);
      json j = to_json(kf);
      j["class"] = to_string(compactification_class(kf));
      out << j << "\n";
    } else if (c_semideg->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      ThetaVector th = theta_from_json(parse_arg_json(theta_arg));
      KeyFormSet kf = build_key_forms(w, th);
      LaurentPoly f = poly_from_json(load_json_argument(poly_arg));
      out << json{{"semidegree", semidegree(f, kf)}} << "\n";
    } else if (c_classify->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      out << to_json(singularity_report(w)) << "\n";
    } else if (c_equations->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      ThetaVector th = theta_from_json(parse_arg_json(theta_arg));
      if (th.empty() && w.n() > 0) th.assign(static_cast<size_t>(w.n()), Rational(1));
      out << to_json(embedding_equations(w, th)) << "\n";
    } else if (c_curve->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      out << to_json(curve_at_infinity(w)) << "\n";
    } else if (c_aut->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      out << to_json(aut_group(w)) << "\n";
    } else if (c_moduli->parsed()) {
      if (essential_mode && curve_mode)
        fail(Errc::UsageError, "--essential and --curve are mutually exclusive");
      if (curve_mode) {
        json j = parse_arg_json(omega_arg);
        std::vector<long long> delta;
        for (const auto& v : j) delta.push_back(v.get<long long>());
        out << to_json(curve_moduli(delta)) << "\n";
      } else {
        KeySequence w = omega_from_json(parse_arg_json(omega_arg));
        out << to_json(essential_mode ? moduli_essential(w) : moduli_fixed(w))
            << "\n";
      }
    } else if (c_g2a->parsed()) {
      KeySequence w = omega_from_json(parse_arg_json(omega_arg));
      out << to_json(g2a_report(w)) << "\n";
    } else if (c_norm->parsed()) {
      GenericSeries s = series_from_json(load_json_argument(series_arg));
      out << to_json(normalize_series(s)) << "\n";
    } else if (c_brenton->parsed()) {
      out << to_json(brenton_enumerate(bound)) << "\n";
    } else if (c_enum->parsed()) {
      EnumFilters filters = parse_filters(filter_args);
      EnumBounds bounds{max_entry, max_length};
      for (const KeySequence& w : enumerate_collect(bounds, filters, jobs))
        out << json{{"omega", to_json(w)}} << "\n";
    } else if (c_selftest->parsed()) {
      return run_selftest(out);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::UsageError) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    out << json{{"error", {{"code", e.code_name()}, {"message", e.what()}}}}
        << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "usage error: bad JSON input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pnc
