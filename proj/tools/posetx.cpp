// Command-line front end: poset file inspection, downset counting,
// extension counting, catalog generation and verification, census tables.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetx/catalog.hpp"
#include "posetx/expo.hpp"
#include "posetx/io.hpp"
#include "posetx/reference.hpp"
#include "posetx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

posetx::Poset load_poset(const std::string& path) {
  if (path == "-") return posetx::parse_poset(std::cin);
  std::ifstream in(path);
  if (!in) throw posetx::ParseError(0, "cannot open '" + path + "'");
  return posetx::parse_poset(in);
}

std::string mask_as_list(posetx::Mask m) {
  std::string out = "{";
  bool first = true;
  posetx::for_each_bit(m, [&](int x) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x);
  });
  return out + "}";
}

int cmd_info(const std::string& path, const std::string& format) {
  posetx::Poset p = load_poset(path);
  posetx::Int d = posetx::d_count(p);
  posetx::ExpSum es = posetx::exp_sum(p);
  posetx::Mask mins = p.minimal_points();
  int m = posetx::popcount(mins);
  int h = p.height();

  if (format == "json") {
    nlohmann::json j;
    j["k"] = p.size();
    j["d"] = d.str();
    j["exp"] = es.str();
    j["min"] = nlohmann::json::array();
    posetx::for_each_bit(mins, [&](int x) { j["min"].push_back(x); });
    j["m"] = m;
    j["height"] = h;
    if (p.size() > 0) {
      j["max_d_minimals"] = posetx::max_d_given_minimals(p.size(), m).max_d.str();
      j["max_d_height"] = posetx::max_d_given_height(p.size(), h).max_d.str();
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "k=" << p.size() << " d=" << d.str() << " exp=" << es.str() << "\n";
  std::cout << "min=" << mask_as_list(mins) << " m=" << m << " height=" << h << "\n";
  if (p.size() > 0) {
    posetx::Int bm = posetx::max_d_given_minimals(p.size(), m).max_d;
    posetx::Int bh = posetx::max_d_given_height(p.size(), h).max_d;
    std::cout << "max-d-for-minimals=" << bm.str() << " slack=" << posetx::Int(bm - d).str()
              << "\n";
    std::cout << "max-d-for-height=" << bh.str() << " slack=" << posetx::Int(bh - d).str()
              << "\n";
  }
  return kExitOk;
}

int cmd_downsets(const std::string& path, bool list, const std::string& algo,
                 const std::string& format) {
  posetx::Poset p = load_poset(path);
  posetx::Int count;
  if (algo == "brute") {
    count = posetx::Int(posetx::downset_masks(p).size());
  } else if (algo == "split") {
    count = posetx::d_count(p);
  } else if (algo == "antichain") {
    count = posetx::d_antichain_formula(p, p.minimal_points());
  } else {
    std::cerr << "unknown algorithm '" << algo << "'\n";
    return kExitInputError;
  }
  if (format == "json") {
    nlohmann::json j;
    j["d"] = count.str();
    if (list) {
      j["downsets"] = nlohmann::json::array();
      for (posetx::Mask m : posetx::downset_masks(p)) {
        nlohmann::json set = nlohmann::json::array();
        posetx::for_each_bit(m, [&](int x) { set.push_back(x); });
        j["downsets"].push_back(set);
      }
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "d=" << count.str() << "\n";
  if (list)
    for (posetx::Mask m : posetx::downset_masks(p)) std::cout << mask_as_list(m) << "\n";
  return kExitOk;
}

int cmd_expo(const std::string& path, int m, bool sum, bool verify, long long budget,
             unsigned m_max, const std::string& format) {
  posetx::Poset p = load_poset(path);
  if (sum) {
    if (format == "json")
      std::cout << nlohmann::json{{"exp", posetx::exp_sum(p).str()}}.dump(2) << "\n";
    else
      std::cout << posetx::exp_sum(p).str() << "\n";
    return kExitOk;
  }
  if (verify) {
    posetx::ExpSum es = posetx::exp_sum(p);
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
      std::cout << (pass ? "[ok]   " : "[FAIL] ") << name << "\n";
      ok = ok && pass;
    };
    bool triangle = true;
    for (unsigned mm = 0; mm <= 3 && triangle; ++mm) {
      posetx::Int a = posetx::e_incl_excl(mm, p);
      triangle = a == es.eval(mm);
      try {
        triangle = triangle && a == posetx::e_oracle_maps(mm, p, budget);
      } catch (const posetx::BudgetExceededError&) {
      }
      try {
        triangle = triangle && a == posetx::e_oracle_orders(mm, p);
      } catch (const posetx::BudgetExceededError&) {
      }
    }
    report("oracle-agreement", triangle);
    report("leading-term", es.leading_coeff() == 1 && es.leading_base() == posetx::d_count(p));
    report("value-at-one", es.weighted_coeff_sum() == 1);
    report("value-at-zero", es.coeff_sum() == (p.empty() ? 1 : 0));
    report("divisibility", posetx::divisibility_suite(p, m_max).all_pass());
    return ok ? kExitOk : kExitVerifyFailure;
  }
  if (m < 0) {
    std::cerr << "expo needs --m, --sum, or --verify\n";
    return kExitInputError;
  }
  posetx::Int value = posetx::exp_sum(p).eval(static_cast<unsigned>(m));
  if (format == "json")
    std::cout << nlohmann::json{{"m", m}, {"value", value.str()}}.dump(2) << "\n";
  else
    std::cout << value.str() << "\n";
  return kExitOk;
}

int cmd_catalog_build(int k_max, const std::string& out_path, int threads) {
  posetx::CatalogFile file;
  file.k_max = k_max;
  file.entries = posetx::enumerate_catalog(k_max, threads);
  std::string text = posetx::write_catalog(file);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return kExitInputError;
    }
    out << text;
  }
  return kExitOk;
}

int cmd_catalog_verify(const posetx::VerifyScope& scope) {
  auto results = posetx::run_verify_checks(scope);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    ok = ok && r.pass;
  }
  std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? kExitOk : kExitVerifyFailure;
}

void print_matrix(const char* name, const std::vector<std::vector<posetx::Int>>& m) {
  std::cout << name << ":\n";
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j)
      std::cout << (j ? "\t" : "") << row[j].str();
    std::cout << "\n";
  }
}

int cmd_catalog_matrices(int k_max, int m_max, int threads) {
  auto cat = posetx::enumerate_catalog(k_max, threads);
  posetx::CatalogMatrices mats = posetx::catalog_matrices(cat, m_max);
  print_matrix("A", mats.A);
  print_matrix("B", mats.B);
  print_matrix("C", mats.C);
  print_matrix("D", mats.D);
  print_matrix("E", mats.E);
  return kExitOk;
}

int cmd_catalog_tables(int k_max, int threads) {
  auto cat = posetx::enumerate_catalog(k_max, threads);
  for (int k = 0; k <= k_max; ++k)
    std::cout << "e_" << k << "(m) = " << posetx::aggregate_exp(cat, k).str() << "\n";
  for (int k = 1; k <= k_max; ++k)
    for (int n = 1; n <= k; ++n)
      std::cout << "e_" << k << n << "(m) = " << posetx::aggregate_exp_min(cat, k, n).str()
                << "\n";
  for (int k = 1; k <= k_max; ++k)
    for (int h = 1; h <= k; ++h)
      std::cout << "e_" << k << "^" << h
                << "(m) = " << posetx::aggregate_exp_height(cat, k, h).str() << "\n";
  std::cout << "p:";
  for (int k = 0; k <= k_max; ++k)
    std::cout << " " << posetx::aggregate_e_k(cat, k, 1).str();
  std::cout << " " << posetx::aggregate_e_k(cat, k_max, 2).str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poset combinatorics: downsets, antichains, extension counts"};
  app.require_subcommand(1);

  std::string file, format = "text", algo = "split", out_path;
  bool list = false, want_sum = false, want_verify = false;
  int m_value = -1;
  int k_max = 5, m_max = 6, threads = 1;
  long long budget = posetx::kDefaultOracleBudget;
  std::uint64_t seed = posetx::VerifyScope{}.seed;

  auto* info = app.add_subcommand("info", "summarize a poset file");
  info->add_option("file", file)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* downsets = app.add_subcommand("downsets", "count (and list) downsets");
  downsets->add_option("file", file)->required();
  downsets->add_flag("--list", list);
  downsets->add_option("--algo", algo)->check(CLI::IsMember({"brute", "split", "antichain"}));
  downsets->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* expo = app.add_subcommand("expo", "extension counts with fixed minimal points");
  expo->add_option("file", file)->required();
  expo->add_option("--m", m_value);
  expo->add_flag("--sum", want_sum);
  expo->add_flag("--verify", want_verify);
  expo->add_option("--budget", budget);
  expo->add_option("--m-max", m_max);
  expo->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "isomorphism-class catalog");
  catalog->require_subcommand(1);
  auto* build = catalog->add_subcommand("build", "enumerate classes and write the catalog");
  build->add_option("--max-k", k_max);
  build->add_option("--out", out_path);
  build->add_option("--threads", threads);
  auto* verify = catalog->add_subcommand("verify", "run the named verification checks");
  verify->add_option("--max-k", k_max);
  verify->add_option("--m-max", m_max);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  auto* matrices = catalog->add_subcommand("matrices", "print the transfer matrices");
  matrices->add_option("--max-k", k_max);
  matrices->add_option("--m-max", m_max);
  matrices->add_option("--threads", threads);
  auto* tables = catalog->add_subcommand("tables", "print aggregated census tables");
  tables->add_option("--max-k", k_max);
  tables->add_option("--threads", threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return cmd_info(file, format);
    if (*downsets) return cmd_downsets(file, list, algo, format);
    if (*expo)
      return cmd_expo(file, m_value, want_sum, want_verify, budget,
                      static_cast<unsigned>(std::max(1, m_max)), format);
    if (*build) return cmd_catalog_build(k_max, out_path, threads);
    if (*verify) {
      posetx::VerifyScope scope;
      scope.k_max = k_max;
      scope.m_max = m_max;
      scope.seed = seed;
      scope.threads = threads;
      return cmd_catalog_verify(scope);
    }
    if (*matrices) return cmd_catalog_matrices(k_max, m_max, threads);
    if (*tables) return cmd_catalog_tables(k_max, threads);
  } catch (const posetx::BudgetExceededError& ex) {
    std::cerr << "budget exceeded: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const posetx::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const posetx::CycleError& ex) {
    std::cerr << "not a partial order: " << ex.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
