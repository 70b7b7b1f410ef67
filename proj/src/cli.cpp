#include "kzeta/cli.hpp"

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kzeta/arith.hpp"
#include "kzeta/class_numbers.hpp"
#include "kzeta/kloosterman.hpp"
#include "kzeta/local.hpp"
#include "kzeta/monomial.hpp"
#include "kzeta/qseries.hpp"
#include "kzeta/special.hpp"
#include "kzeta/verify.hpp"

namespace kzeta {

namespace {

using json = nlohmann::ordered_json;

// All floating-point output goes through here: 15 significant digits,
// serialized as strings so the payload is byte-stable.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

json complex_json(std::complex<double> z) {
  return json{{"re", fmt(z.real())}, {"im", fmt(z.imag())}};
}

json monomial_json(const MonomialValue& v) {
  return json{{"coeff_re", rat_str(v.coeff().re)},
              {"coeff_im", rat_str(v.coeff().im)},
              {"pi_pow", v.pi_pow()},
              {"sqrt_arg", v.sqrt_arg()}};
}

json report_json(const VerifyReport& rep) {
  return json{{"ok", rep.ok},
              {"checked", rep.checked},
              {"first_fail", rep.first_fail},
              {"detail", rep.detail}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else if (value.is_array()) {
      for (size_t i = 0; i < value.size(); ++i) {
        json row = value[i];
        if (row.is_object())
          flatten(row, name + "." + std::to_string(i), out);
        else
          out << name << "." << i << "," << row.dump() << "\n";
      }
    } else if (value.is_string()) {
      out << name << "," << value.get<std::string>() << "\n";
    } else {
      out << name << "," << value.dump() << "\n";
    }
  }
}

struct Invocation {
  std::string format = "json";
  json payload;
  const QSeries* series = nullptr;  // set when the result is a coefficient table
  int exit_code = 0;

  void emit(std::ostream& out) const {
    if (format == "csv") {
      if (series) {
        out << series->to_csv();
      } else {
        out << "key,value\n";
        flatten(payload, "", out);
      }
    } else {
      out << payload.dump(2) << "\n";
    }
  }
};

json series_json(const QSeries& s) { return s.to_json(); }

long long parse_k(const std::string& k) {
  if (k == "1/2") return 1;
  if (k == "3/2") return 3;
  throw std::invalid_argument("--k must be 1/2 or 3/2");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Hurwitz class numbers, Kloosterman sums and Kloosterman zeta data"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // hurwitz
  auto* c_hur = app.add_subcommand("hurwitz", "Hurwitz class number H(n)");
  long long hur_n = -1, hur_from = -1, hur_to = -1;
  c_hur->add_option("--n", hur_n, "single index");
  c_hur->add_option("--from", hur_from, "table start (inclusive)");
  c_hur->add_option("--to", hur_to, "table end (inclusive)");

  // gen-hurwitz
  auto* c_gen = app.add_subcommand("gen-hurwitz", "generalized class number H_{ell,N}(n)");
  long long gen_ell = 1, gen_N = 1, gen_n = -1, gen_from = -1, gen_to = -1;
  c_gen->add_option("--ell", gen_ell, "divisor ell of N")->required();
  c_gen->add_option("--N", gen_N, "odd squarefree level")->required();
  c_gen->add_option("--n", gen_n, "single index");
  c_gen->add_option("--from", gen_from, "table start (inclusive)");
  c_gen->add_option("--to", gen_to, "table end (inclusive)");

  // series
  auto* c_ser = app.add_subcommand("series", "q-expansion tables");
  std::string ser_kind;
  long ser_prec = 20;
  long long ser_ell = 1, ser_N = 1;
  std::vector<long long> ser_gram;
  c_ser->add_option("--kind", ser_kind, "theta | hurwitz | ternary")
      ->required()
      ->check(CLI::IsMember({"theta", "hurwitz", "ternary"}));
  c_ser->add_option("--prec", ser_prec, "number of coefficients")->capture_default_str();
  c_ser->add_option("--ell", ser_ell, "divisor ell (hurwitz kind)");
  c_ser->add_option("--N", ser_N, "level (hurwitz kind)");
  c_ser->add_option("--gram", ser_gram, "Gram matrix g11,g12,g13,g22,g23,g33 (ternary kind)")
      ->delimiter(',')
      ->expected(6);

  // kloosterman
  auto* c_kl = app.add_subcommand("kloosterman", "half-integral weight Kloosterman sum");
  std::string kl_k = "1/2";
  long long kl_m = 0, kl_n = 0, kl_c = 4;
  c_kl->add_option("--k", kl_k, "weight, 1/2 or 3/2")->capture_default_str();
  c_kl->add_option("--m", kl_m)->required();
  c_kl->add_option("--n", kl_n)->required();
  c_kl->add_option("--c", kl_c, "modulus, divisible by 4")->required();

  // local-A
  auto* c_la = app.add_subcommand("local-A", "local density A(p, n)");
  long long la_p = 2, la_n = 0;
  c_la->add_option("--p", la_p, "prime")->required();
  c_la->add_option("--n", la_n)->required();

  // cfrak
  auto* c_cf = app.add_subcommand("cfrak", "central Kloosterman zeta coefficient c(n)");
  long long cf_n = 0, cf_N = 1, cf_from = 1, cf_to = 0;
  c_cf->add_option("--n", cf_n, "single index, n ≡ 0, 1 (mod 4)");
  c_cf->add_option("--N", cf_N, "odd squarefree level")->required();
  c_cf->add_option("--from", cf_from, "table start (inclusive)");
  c_cf->add_option("--to", cf_to, "table end (inclusive)");

  // zeta-check
  auto* c_zc = app.add_subcommand("zeta-check", "factored zeta against the truncated double sum");
  long long zc_n = 0, zc_N = 1, zc_cut = 1000;
  double zc_s = 2.0, zc_tol = 1e-2;
  c_zc->add_option("--n", zc_n)->required();
  c_zc->add_option("--N", zc_N)->required();
  c_zc->add_option("--s", zc_s, "spectral parameter")->capture_default_str();
  c_zc->add_option("--cutoff", zc_cut, "truncation bound")->capture_default_str();
  c_zc->add_option("--tol", zc_tol, "relative tolerance")->capture_default_str();

  // alpha
  auto* c_al = app.add_subcommand("alpha", "the integral alpha(y)");
  double al_y = 1.0;
  c_al->add_option("--y", al_y)->required();

  // verify
  auto* c_ver = app.add_subcommand("verify", "identity verification suites");
  std::string ver_suite;
  long long ver_N = 5;
  long ver_prec = 100;
  double ver_tol = -1.0;
  c_ver->add_option("suite", ver_suite, "thm11 | example | shadow | theta3 | lemma52 | kohnen | prop33")
      ->required()
      ->check(CLI::IsMember({"thm11", "example", "shadow", "theta3", "lemma52", "kohnen", "prop33"}));
  c_ver->add_option("--N", ver_N, "level")->capture_default_str();
  c_ver->add_option("--prec", ver_prec, "coefficient bound")->capture_default_str();
  c_ver->add_option("--tol", ver_tol, "tolerance (numeric suites)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  Invocation inv;
  inv.format = format;
  QSeries table(1);

  try {
    if (*c_hur) {
      inv.payload = {{"command", "hurwitz"}, {"params", json::object()}, {"status", "ok"}};
      if (hur_n >= 0) {
        inv.payload["params"]["n"] = hur_n;
        inv.payload["value"] = rat_str(hurwitz(hur_n));
      } else {
        if (hur_from < 0 || hur_to < hur_from)
          throw std::invalid_argument("need --n or a valid --from/--to range");
        inv.payload["params"] = {{"from", hur_from}, {"to", hur_to}};
        table = QSeries(hur_to + 1);
        for (long long n = hur_from; n <= hur_to; ++n) table.set(n, hurwitz(n));
        inv.payload["series"] = series_json(table);
        inv.series = &table;
      }
    } else if (*c_gen) {
      inv.payload = {{"command", "gen-hurwitz"},
                     {"params", {{"ell", gen_ell}, {"N", gen_N}}},
                     {"status", "ok"}};
      if (gen_n >= 0) {
        inv.payload["params"]["n"] = gen_n;
        inv.payload["value"] = rat_str(gen_hurwitz(gen_ell, gen_N, gen_n));
      } else {
        if (gen_from < 0 || gen_to < gen_from)
          throw std::invalid_argument("need --n or a valid --from/--to range");
        inv.payload["params"]["from"] = gen_from;
        inv.payload["params"]["to"] = gen_to;
        table = QSeries(gen_to + 1);
        for (long long n = gen_from; n <= gen_to; ++n)
          table.set(n, gen_hurwitz(gen_ell, gen_N, n));
        inv.payload["series"] = series_json(table);
        inv.series = &table;
      }
    } else if (*c_ser) {
      inv.payload = {{"command", "series"},
                     {"params", {{"kind", ser_kind}, {"prec", ser_prec}}},
                     {"status", "ok"}};
      if (ser_kind == "theta") {
        table = theta_series(ser_prec);
      } else if (ser_kind == "hurwitz") {
        inv.payload["params"]["ell"] = ser_ell;
        inv.payload["params"]["N"] = ser_N;
        table = hurwitz_series(ser_ell, ser_N, ser_prec);
      } else {
        if (ser_gram.size() != 6)
          throw std::invalid_argument("ternary kind needs --gram with 6 entries");
        inv.payload["params"]["gram"] = ser_gram;
        table = ternary_theta(
            TernaryForm({ser_gram[0], ser_gram[1], ser_gram[2], ser_gram[3], ser_gram[4],
                         ser_gram[5]}),
            ser_prec);
      }
      inv.payload["series"] = series_json(table);
      inv.series = &table;
    } else if (*c_kl) {
      long long two_k = parse_k(kl_k);
      inv.payload = {{"command", "kloosterman"},
                     {"params", {{"k", kl_k}, {"m", kl_m}, {"n", kl_n}, {"c", kl_c}}},
                     {"status", "ok"}};
      inv.payload["value"] = complex_json(kloosterman(static_cast<int>(two_k), kl_m, kl_n, kl_c));
    } else if (*c_la) {
      inv.payload = {{"command", "local-A"},
                     {"params", {{"p", la_p}, {"n", la_n}}},
                     {"status", "ok"}};
      Cyc8 a = local_density_A(la_p, la_n);
      GaussianRational g = a.gaussian_part();
      inv.payload["value"] = {{"re", rat_str(g.re)}, {"im", rat_str(g.im)}};
      inv.payload["embed"] = complex_json(a.embed());
    } else if (*c_cf) {
      inv.payload = {{"command", "cfrak"}, {"params", {{"N", cf_N}}}, {"status", "ok"}};
      auto one = [&](long long n) {
        SpecialZetaValue v = c_frak(n, cf_N);
        json entry = {{"n", n}};
        if (v.tag == SpecialZetaValue::Tag::exact) {
          entry["kind"] = "exact";
          entry["monomial"] = monomial_json(v.exact);
        } else {
          entry["kind"] = "numeric";
        }
        entry["value"] = complex_json(v.approx);
        return entry;
      };
      if (cf_to >= cf_from && cf_to > 0) {
        inv.payload["params"]["from"] = cf_from;
        inv.payload["params"]["to"] = cf_to;
        json rows = json::array();
        for (long long n = cf_from; n <= cf_to; ++n)
          if (((n % 4) + 4) % 4 <= 1) rows.push_back(one(n));
        inv.payload["rows"] = rows;
      } else {
        inv.payload["params"]["n"] = cf_n;
        json entry = one(cf_n);
        entry.erase("n");
        inv.payload.update(entry);
      }
    } else if (*c_zc) {
      std::complex<double> direct = kz_truncated(zc_n, zc_N, zc_s, zc_cut);
      std::complex<double> fact = kz_factored(zc_n, zc_N, zc_s);
      double rel = std::abs(fact - direct) / std::abs(direct);
      bool ok = rel < zc_tol;
      inv.payload = {{"command", "zeta-check"},
                     {"params",
                      {{"n", zc_n}, {"N", zc_N}, {"s", fmt(zc_s)}, {"cutoff", zc_cut},
                       {"tol", fmt(zc_tol)}}},
                     {"status", ok ? "ok" : "mismatch"},
                     {"factored", complex_json(fact)},
                     {"truncated", complex_json(direct)},
                     {"rel_error", fmt(rel)}};
      inv.exit_code = ok ? 0 : 1;
    } else if (*c_al) {
      inv.payload = {{"command", "alpha"},
                     {"params", {{"y", fmt(al_y)}}},
                     {"status", "ok"},
                     {"value", fmt(alpha(al_y))}};
    } else if (*c_ver) {
      VerifyReport rep;
      json params = {{"suite", ver_suite}};
      if (ver_suite == "thm11") {
        params["N"] = ver_N;
        params["prec"] = ver_prec;
        rep = verify_thm11(ver_N, ver_prec);
      } else if (ver_suite == "example") {
        params["N"] = ver_N;
        params["prec"] = ver_prec;
        rep = verify_example(ver_N, ver_prec);
      } else if (ver_suite == "shadow") {
        params["N"] = ver_N;
        params["prec"] = ver_prec;
        rep = verify_shadow(ver_N, ver_prec);
      } else if (ver_suite == "theta3") {
        params["prec"] = ver_prec;
        rep = verify_theta3(ver_prec);
      } else if (ver_suite == "lemma52") {
        params["N"] = ver_N;
        params["prec"] = ver_prec;
        rep = verify_lemma52(ver_N, ver_prec);
      } else if (ver_suite == "kohnen") {
        double tol = ver_tol > 0 ? ver_tol : 1e-9;
        long long cmax = ver_prec > 0 ? std::min<long long>(ver_prec, 99) : 25;
        params["N"] = ver_N;
        params["cmax"] = cmax;
        params["tol"] = fmt(tol);
        rep = verify_kohnen(ver_N, cmax, 12, tol);
      } else {
        double tol = ver_tol > 0 ? ver_tol : 1e-2;
        params["tol"] = fmt(tol);
        rep = verify_prop33(tol);
      }
      inv.payload = {{"command", "verify"},
                     {"params", params},
                     {"status", rep.ok ? "ok" : "mismatch"},
                     {"report", report_json(rep)}};
      inv.exit_code = rep.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  inv.emit(out);
  return inv.exit_code;
}

}  // namespace kzeta
