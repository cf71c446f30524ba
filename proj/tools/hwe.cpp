// hwe: command-line front end for harmonic weight enumerators.
//
// Exit codes: 0 success or verified, 1 operational error (parse, budget,
// identity mismatch), 2 usage error, 3 mathematically refuted.

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hwe/hwe.hpp"
#include "hwe/io.hpp"

namespace {

using namespace hwe;

constexpr int kOk = 0, kError = 1, kUsage = 2, kRefuted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void usage_check(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string monomial(long deg, long j) {
  return "x^" + std::to_string(deg - j) + " y^" + std::to_string(j);
}

// Empty when equal, otherwise the first differing coefficient.
std::string compare(const HomogeneousPoly& lhs, const HomogeneousPoly& rhs) {
  if (lhs.degree() != rhs.degree())
    return "degree " + std::to_string(lhs.degree()) + " vs " + std::to_string(rhs.degree());
  for (long j = 0; j <= lhs.degree(); ++j)
    if (lhs[j] != rhs[j])
      return "coefficient of " + monomial(lhs.degree(), j) + ": " + format_rational(lhs[j]) + " vs " +
             format_rational(rhs[j]);
  return {};
}

std::string compare(const TwoVarPoly& lhs, const TwoVarPoly& rhs) {
  std::vector<TwoVarPoly::Key> keys;
  for (const auto& [k, v] : lhs.terms()) keys.push_back(k);
  for (const auto& [k, v] : rhs.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto& [a, b] : keys)
    if (lhs.coeff(a, b) != rhs.coeff(a, b))
      return "coefficient of x^" + std::to_string(a) + " y^" + std::to_string(b) + ": " +
             format_rational(lhs.coeff(a, b)) + " vs " + format_rational(rhs.coeff(a, b));
  return {};
}

// ---------------------------------------------------------------------------

int cmd_basis(long n, long d, const std::string& output) {
  usage_check(n >= 1 && static_cast<std::size_t>(n) <= kMaxLength,
              "-n must lie in 1.." + std::to_string(kMaxLength));
  usage_check(d >= 1 && d <= n, "-d must lie in 1..n");
  const auto basis = harm_basis(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  if (!output.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(output);
    Json manifest;
    manifest["n"] = n;
    manifest["d"] = d;
    manifest["dimension"] = basis.size();
    Json files = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::string name = "harm_n" + std::to_string(n) + "_d" + std::to_string(d) + "_" + std::to_string(i + 1) + ".json";
      std::ofstream(fs::path(output) / name) << to_json(basis[i]).dump(2) << "\n";
      files.push_back(name);
    }
    manifest["files"] = std::move(files);
    std::ofstream(fs::path(output) / "manifest.json") << manifest.dump(2) << "\n";
  }
  std::cout << "dimension " << basis.size() << "\n";
  return kOk;
}

int cmd_enum(const std::string& code_file, const std::string& harm_file, const std::string& mode, long r, long m,
             const std::string& format, const Budget& budget) {
  const LinearCode c = read_code_file(code_file);
  const HarmonicFunction f = read_harmonic_file(harm_file);
  if (c.length() != f.n()) throw Error(ErrorKind::InvalidArgument, "code length and harmonic ground set differ");
  Json out;
  out["mode"] = mode;
  out["n"] = c.length();
  out["d"] = f.degree();
  std::ostringstream text;
  if (mode == "higher") {
    usage_check(r >= 0, "higher mode needs -r");
    const auto spectrum = higher_A(c, f, r, budget);
    const auto w = spectrum_W(spectrum), z = spectrum_Z(spectrum);
    out["r"] = r;
    out["W"] = to_json(w);
    out["Z"] = to_json(z);
    text << "W = " << format_poly(w) << "\nZ = " << format_poly(z) << "\n";
  } else {
    usage_check(m >= 0, "extended mode needs -m");
    const auto z = extended_Z(c, f, m);
    out["m"] = m;
    out["Z"] = to_json(z);
    text << "Z = " << format_poly(z) << "\n";
  }
  std::cout << (format == "json" ? out.dump(2) + "\n" : text.str());
  return kOk;
}

struct Instance {
  std::string label;
  std::function<std::string()> check;  // empty string on an exact match
};

std::vector<Instance> verify_instances(const LinearCode& c, const std::string& identity, long t_max, long max_m,
                                       const Budget& budget) {
  const std::size_t n = c.length(), k = c.dimension();
  const long q = c.field().order();
  const auto cd = std::make_shared<const LinearCode>(dual(c));
  const auto cp = std::make_shared<const LinearCode>(c);
  const long top = std::min<long>(t_max, static_cast<long>(n / 2));
  std::vector<Instance> out;
  if (identity == "duality") {
    // M_{C-perp} is the dual matroid of M_C.
    auto m = std::make_shared<Matroid>(vector_matroid(c));
    auto ms = std::make_shared<Matroid>(vector_matroid(*cd));
    for (long d = 1; d <= top; ++d) {
      const auto basis = harm_basis(n, static_cast<std::size_t>(d));
      for (std::size_t b = 0; b < basis.size(); ++b)
        out.push_back({"d=" + std::to_string(d) + " f=" + std::to_string(b + 1), [m, ms, f = basis[b], d] {
                         return compare(harmonic_tutte(*ms, f), harmonic_tutte(*m, f).swapped() * detail::sign(d));
                       }});
    }
    return out;
  }
  const long kd = static_cast<long>(cd->dimension());
  for (long d = 1; d <= top; ++d) {
    const auto basis = harm_basis(n, static_cast<std::size_t>(d));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& f = basis[b];
      const std::string base = "d=" + std::to_string(d) + " f=" + std::to_string(b + 1);
      auto add = [&](const std::string& param, std::function<std::string()> fn) {
        out.push_back({base + " " + param, std::move(fn)});
      };
      if (identity == "mac-higher") {
        for (long r = 1; r <= kd; ++r)
          add("r=" + std::to_string(r), [=] {
            std::vector<HomogeneousPoly> zs;
            for (long l = 0; l <= r; ++l)
              zs.push_back(l <= static_cast<long>(k) ? higher_Z(*cp, f, l, budget)
                                                     : HomogeneousPoly(detail::z_degree(n, f.degree())));
            return compare(macwilliams_higher(zs, n, k, f.degree(), q, r), higher_Z(*cd, f, r, budget));
          });
      } else if (identity == "mac-extended") {
        for (long m = 1; m <= max_m; ++m)
          add("m=" + std::to_string(m), [=] {
            return compare(macwilliams_extended(extended_Z(*cp, f, m), n, k, f.degree(), q, m), extended_Z(*cd, f, m));
          });
      } else if (identity == "greene-higher") {
        for (long r = 1; r <= static_cast<long>(k); ++r)
          add("r=" + std::to_string(r),
              [=] { return compare(greene_higher_rhs(*cp, f, r), higher_Z(*cp, f, r, budget)); });
      } else if (identity == "greene-extended") {
        for (long m = 1; m <= max_m; ++m)
          add("m=" + std::to_string(m), [=] {
            return compare(greene_extended_rhs(*cp, f, m), spectrum_Z(extended_A_oracle(*cp, f, m, budget)));
          });
      } else if (identity == "links") {
        for (long m = 1; m <= max_m; ++m)
          add("m=" + std::to_string(m), [=] {
            std::vector<HigherSpectrum> spectra;
            for (long r = 0; r <= static_cast<long>(k); ++r) spectra.push_back(higher_A(*cp, f, r, budget));
            return compare(spectrum_Z(extended_from_higher(spectra, m, q)), extended_Z(*cp, f, m));
          });
        for (long r = 1; r <= static_cast<long>(k); ++r)
          add("r=" + std::to_string(r), [=] {
            std::vector<HomogeneousPoly> zs;
            for (long j = 0; j <= r; ++j) zs.push_back(extended_Z(*cp, f, j));
            return compare(higher_from_extended(zs, r, q), higher_Z(*cp, f, r, budget));
          });
      }
    }
  }
  return out;
}

int cmd_verify(const std::string& code_file, const std::string& identity, long t_max, long max_m, unsigned jobs,
               const Budget& budget) {
  usage_check(t_max >= 1, "-t must be >= 1");
  usage_check(max_m >= 1, "--max-m must be >= 1");
  const LinearCode c = read_code_file(code_file);
  const auto instances = verify_instances(c, identity, t_max, max_m, budget);

  struct Result {
    std::string mismatch, error;
  };
  std::vector<Result> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        results[i].mismatch = instances[i].check();
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t passed = 0;
  const Result* first = nullptr;
  const Instance* first_instance = nullptr;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& res = results[i];
    const bool ok = res.mismatch.empty() && res.error.empty();
    std::cout << (ok ? "PASS  " : "FAIL  ") << identity << " " << instances[i].label << "\n";
    if (ok) {
      ++passed;
    } else if (!first) {
      first = &res;
      first_instance = &instances[i];
    }
  }
  std::cout << passed << "/" << instances.size() << " instances passed\n";
  if (first) {
    if (!first->error.empty())
      std::cerr << "error in " << first_instance->label << ": " << first->error << "\n";
    else
      std::cerr << "first mismatch in " << first_instance->label << ": " << first->mismatch << "\n";
    return kError;
  }
  return kOk;
}

int cmd_design(const std::string& code_file, long r, long i, long t, const Budget& budget) {
  usage_check(t >= 1, "-t must be >= 1");
  usage_check(i >= 0, "-i must be >= 0");
  usage_check(t <= i, "-t must not exceed -i");
  const LinearCode c = read_code_file(code_file);
  check_subcode_rank(c, r);
  const auto rep = is_t_design(subcode_supports(c, r, static_cast<std::size_t>(i), budget), t);
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.is_design ? kOk : kRefuted;
}

int cmd_am(const std::string& code_file, long r, long t, const Budget& budget) {
  usage_check(t >= 1, "-t must be >= 1");
  const LinearCode c = read_code_file(code_file);
  const auto rep = am_check(c, r, t, budget);
  std::cout << to_json(rep).dump(2) << "\n";
  return rep.verified() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic higher and extended weight enumerators of linear codes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget_items = Budget{}.max_items;
  app.add_option("--budget", budget_items, "Maximum number of codewords or subcodes to enumerate");

  long n = 0, d = 0, r = -1, m = -1, t = 1, i = -1, max_m = 2;
  unsigned jobs = 1;
  std::string output, code_file, harm_file, mode = "higher", format = "text", identity;

  auto* basis = app.add_subcommand("basis", "Write a basis of Harm_d(n)");
  basis->add_option("-n,--length", n, "Ground set size")->required();
  basis->add_option("-d,--degree", d, "Degree")->required();
  basis->add_option("--output", output, "Directory for the basis files and manifest.json");

  auto* en = app.add_subcommand("enum", "Compute a harmonic enumerator");
  en->add_option("--code", code_file, "Code file")->required();
  en->add_option("--harm", harm_file, "Harmonic function JSON")->required();
  en->add_option("--mode", mode, "higher or extended")->check(CLI::IsMember({"higher", "extended"}));
  en->add_option("-r,--rank", r, "Subcode dimension (higher mode)");
  en->add_option("-m,--ext-degree", m, "Extension degree (extended mode)");
  en->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "Check an identity over the harmonic basis");
  ver->add_option("--code", code_file, "Code file")->required();
  ver->add_option("--identity", identity, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"mac-higher", "mac-extended", "greene-higher", "greene-extended", "links", "duality"}));
  t = 3;
  ver->add_option("-t,--max-degree", t, "Largest harmonic degree d (capped at n/2)");
  ver->add_option("--max-m", max_m, "Largest extension degree m");
  ver->add_option("--jobs", jobs, "Worker threads");

  auto* des = app.add_subcommand("design", "Test whether S_{r,i}(C) is a t-design");
  des->add_option("--code", code_file, "Code file")->required();
  des->add_option("-r,--rank", r, "Subcode dimension")->required();
  des->add_option("-i,--weight", i, "Support size")->required();
  des->add_option("-t,--strength", t, "Design strength")->required();

  auto* am = app.add_subcommand("am", "Assmus-Mattson check for r-dimensional subcodes");
  am->add_option("--code", code_file, "Code file")->required();
  am->add_option("-r,--rank", r, "Subcode dimension")->required();
  am->add_option("-t,--strength", t, "Design strength")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Budget budget{budget_items};
  try {
    if (*basis) return cmd_basis(n, d, output);
    if (*en) return cmd_enum(code_file, harm_file, mode, r, m, format, budget);
    if (*ver) return cmd_verify(code_file, identity, t, max_m, jobs, budget);
    if (*des) return cmd_design(code_file, r, i, t, budget);
    if (*am) return cmd_am(code_file, r, t, budget);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}
