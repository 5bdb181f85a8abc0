// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <greenring-cli> <golden-dir>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "greenring/bifrob.hpp"
#include "greenring/dickson.hpp"
#include "greenring/presented.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace greenring;

namespace {

int integrality_failures = 0;

// Runs f, counting Integrality errors separately so criterion 3 can report them.
bool guarded(const std::function<bool(std::string&)>& f, std::string& note) {
  try {
    return f(note);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Integrality) ++integrality_failures;
    note = e.what();
  } catch (const std::exception& e) {
    note = e.what();
  }
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BasedRing stable_based(int n) {
  const BasedRing r = based_from_presented(make_ring(RingKind::Stable, n));
  return r.with_involution(detect_involution(r));
}

std::size_t sidx(int n, int i, int j) {
  return static_cast<std::size_t>(j - 1) * n + static_cast<std::size_t>(((i % n) + n) % n);
}

// Rank over Q by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool c1(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 1; k <= 30; ++k)
    if (dickson_f(k) != dickson_closed(k) || dickson_f(k) != gt::table_poly(gt::dickson_table(k))) {
      note = "mismatch at k=" + std::to_string(k);
      return false;
    }
  for (int j = 0; j <= 20; ++j) {
    Poly sum;
    for (const auto& t : monomial_to_f_basis(j))
      sum += Poly::monomial(t.y_exp, 0) * gt::table_poly(gt::dickson_table(t.f_index)) * Rational(t.coeff);
    if (sum != Poly::monomial(0, static_cast<std::uint32_t>(j))) {
      note = "round trip fails at j=" + std::to_string(j);
      return false;
    }
  }
  const double t = seconds_since(t0);
  note = std::to_string(t) + " s";
  return t < 1.0;
}

bool c2(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto spec = make_ring(RingKind::Stable, n);
    const gt::ReferenceRing ref(RingKind::Stable, n, 1);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int l = 1; l < n; ++l)
          for (int k = 0; k < n; ++k) {
            ++pairs;
            const auto want = ref.reduce(gt::stable_rep(i, j) * gt::stable_rep(k, l));
            if (stable_mul_closed(spec, i, j, k, l).coeffs() != want) {
              note = "n=" + std::to_string(n) + " mismatch";
              return false;
            }
          }
  }
  const double t = seconds_since(t0);
  note = std::to_string(pairs) + " products, " + std::to_string(t) + " s";
  return t < 30.0;
}

bool c3(std::string& note) {
  const RingKind kinds[] = {RingKind::RadfordGreen, RingKind::Grothendieck, RingKind::Stable};
  for (RingKind kind : kinds) {
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = gt::uniform(2, 6), m = kind == RingKind::Stable ? 1 : gt::uniform(1, 4);
      const auto s = make_ring(kind, n, m);
      const auto a = gt::random_element(s), b = gt::random_element(s), c = gt::random_element(s);
      const bool ok = ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)) && ring_mul(a, b) == ring_mul(b, a) &&
                      ring_mul(a, b + c) == ring_mul(a, b) + ring_mul(a, c);
      if (!ok) {
        note = to_string(kind) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
    }
  }
  note = "3000 triples";
  return true;
}

bool c4(std::string& note) {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto rg = make_ring(RingKind::RadfordGreen, n, m);
      const auto gr = make_ring(RingKind::Grothendieck, n, m);
      const auto st = make_ring(RingKind::Stable, n);
      const std::size_t nn = static_cast<std::size_t>(n), mm = static_cast<std::size_t>(m);
      if (rg->rank() != nn * nn + mm - 1 || gr->rank() != nn + mm - 1 || st->rank() != nn * (nn - 1)) {
        note = "rank mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
      if (gt::ReferenceRing(RingKind::RadfordGreen, n, m).rank() != rg->rank()) return false;
      const auto kernel = projective_kernel_basis(rg);
      const auto h = stable_projection(rg);
      std::vector<std::vector<Rational>> rows;
      for (const auto& v : kernel) {
        if (!h.apply(v).is_zero()) {
          note = "kernel element not in the kernel";
          return false;
        }
        rows.push_back(v.coeffs());
      }
      if (rational_rank(rows) != nn + mm - 1) {
        note = "kernel rank mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
    }
  note = "n<=8, m<=4";
  return true;
}

bool c5(std::string& note) {
  int trials = 0;
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto rg = make_ring(RingKind::RadfordGreen, n, m);
      const auto hs = stable_projection(rg), hg = grothendieck_projection(rg);
      for (const auto& rel : defining_relations(*rg))
        if (!hs.apply_poly(rel).is_zero() || !hg.apply_poly(rel).is_zero()) {
          note = "relation not killed";
          return false;
        }
      for (int t = 0; t < 25; ++t, ++trials) {
        const auto a = gt::random_element(rg), b = gt::random_element(rg);
        const auto ab = ring_mul(a, b);
        if (hs.apply(ab) != ring_mul(hs.apply(a), hs.apply(b)) || hg.apply(ab) != ring_mul(hg.apply(a), hg.apply(b))) {
          note = "not multiplicative at n=" + std::to_string(n);
          return false;
        }
      }
    }
  note = std::to_string(trials) + " pairs";
  return trials >= 500;
}

bool c6(std::string& note) {
  for (int n = 2; n <= 8; ++n) {
    const BasedRing r = stable_based(n);
    const auto rep = gram_and_radicals(r);
    const auto& sigma = *r.involution();
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j)
        if (rep.gram[i][j] != (j == sigma[i] ? 1 : 0)) {
          note = "Gram differs at n=" + std::to_string(n);
          return false;
        }
    if (!rep.left_radical.empty() || !rep.right_radical.empty() || !rep.nondegenerate) return false;
  }
  const BasedRing toy({"1", "e"}, 0, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  const auto rep = gram_and_radicals(toy);
  const std::vector<IntVector> e{IntVector{0, 1}};
  if (rep.left_radical != e || rep.right_radical != e) {
    note = "toy radical is not span{e}";
    return false;
  }
  return true;
}

bool c7(std::string& note) {
  double worst = 0;
  for (int n = 2; n <= 8; ++n) {
    const BasedRing r = stable_based(n);
    const auto d = fpdim(r);
    const auto& sigma = *r.involution();
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (std::abs(d[i] - q_eval(n, static_cast<int>(i) / n + 1)) > 1e-8 || d[i] < 1 - 1e-9) return false;
      worst = std::max(worst, std::abs(d[i] - d[sigma[i]]));
      for (std::size_t j = 0; j < r.rank(); ++j) {
        double rhs = 0;
        for (const auto& e : r.product(i, j)) rhs += static_cast<double>(e.value) * d[e.k];
        worst = std::max(worst, std::abs(d[i] * d[j] - rhs));
      }
    }
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "worst residual %.2e", worst);
  note = buf;
  return worst < 1e-8;
}

bool c8(std::string& note) {
  for (int n = 2; n <= 8; ++n) {
    const BasedRing r = stable_based(n);
    const auto g = grouplike_build(r, fpdim(r));
    const auto rep = grouplike_verify(g, 1e-9);
    if (!rep.passed()) {
      note = "group-like verify fails at n=" + std::to_string(n);
      return false;
    }
    const auto& sigma = *r.involution();
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j)
        if ((g.p_constant(i, j, r.unit_index()) != 0) != (j == sigma[i])) {
          note = "unit support wrong at n=" + std::to_string(n);
          return false;
        }
  }
  return true;
}

bool c9(std::string& note) {
  for (int n = 2; n <= 8; ++n) {
    const BasedRing r = stable_based(n);
    const auto b = bifrob_build(grouplike_build(r, fpdim(r)), n);
    const auto rep = bifrob_verify(b, 1e-9);
    if (!rep.passed()) {
      note = "bi-Frobenius verify fails at n=" + std::to_string(n);
      return false;
    }
    const std::size_t rank = r.rank();
    auto S = [&](const IntVector& v) {
      IntVector out(rank);
      for (std::size_t c = 0; c < rank; ++c)
        for (std::size_t a = 0; a < rank; ++a) out[a] += b.antipode[a][c] * v[c];
      return out;
    };
    for (int k = 0; k < n; ++k)
      for (int l = 1; l < n; ++l) {
        const std::size_t c = sidx(n, k, l), want = sidx(n, 1 - k - l, l);
        for (std::size_t a = 0; a < rank; ++a)
          if (b.antipode[a][c] != (a == want ? 1 : 0)) {
            note = "antipode closed form fails at n=" + std::to_string(n);
            return false;
          }
      }
    for (std::size_t i = 0; i < rank; ++i) {
      const auto bi = r.basis_vector(i);
      if (S(S(bi)) != bi) return false;
      for (std::size_t j = 0; j < rank; ++j) {
        const auto bj = r.basis_vector(j);
        if (S(r.mul(bi, bj)) != r.mul(S(bj), S(bi))) return false;
      }
      IntVector rebuilt(rank);
      for (int k = 0; k < n; ++k)
        for (int l = 1; l < n; ++l) {
          const auto prod = r.mul(bi, r.basis_vector(sidx(n, 1 - k - l, l)));
          Rational c = 0;
          for (std::size_t t = 0; t < rank; ++t) c += b.phi[t] * Rational(prod[t]);
          if (c.get_den() != 1) return false;
          rebuilt[sidx(n, k, l)] += c.get_num();
        }
      if (rebuilt != bi) {
        note = "Frobenius reconstruction fails at n=" + std::to_string(n);
        return false;
      }
    }
    // Monomial closed forms against the F-basis data.
    const auto spec = make_ring(RingKind::Stable, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n - 2; ++j) {
        const auto f = to_f_basis(spec, i, j);
        if (stable_phi_monomial(n, i, j) != f[0]) return false;
        std::vector<Rational> via_matrix(rank), closed(rank);
        for (std::size_t c = 0; c < rank; ++c)
          for (std::size_t a = 0; a < rank; ++a) via_matrix[a] += Rational(b.antipode[a][c]) * f[c];
        for (const auto& t : stable_antipode_monomial(n, i, j)) closed[*spec->index_of(t.label)] += Rational(t.coeff);
        if (closed != via_matrix) {
          note = "monomial antipode fails at n=" + std::to_string(n);
          return false;
        }
        std::vector<double> delta(rank);
        for (const auto& t : delta_monomial(n, i, j)) delta[*spec->index_of(t.label)] += t.weight;
        for (std::size_t k = 0; k < rank; ++k)
          if (std::abs(delta[k] - f[k].get_d() * b.delta_weights[k]) > 1e-9) {
            note = "monomial coproduct fails at n=" + std::to_string(n);
            return false;
          }
      }
  }
  return true;
}

bool c10(std::string& note) {
  for (int n = 2; n <= 8; ++n)
    if (!check_transitive(stable_based(n)).transitive) {
      note = "not transitive at n=" + std::to_string(n);
      return false;
    }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool c11(std::string& note, const std::string& cli, const std::string& golden) {
  const std::pair<const char*, const char*> cases[] = {
      {"ring --kind stable --n 4 --format json", "ring_stable4.json"},
      {"fpdim --kind stable --n 4 --format csv", "fpdim_stable4.csv"},
      {"verify group-like --kind stable --n 4 --format json", "verify_grouplike_stable4.json"},
      {"verify bifrobenius --kind stable --n 4 --format json", "verify_bifrob_stable4.json"},
  };
  std::string out;
  for (const auto& [args, file] : cases) {
    const std::string want = read_file(golden + "/" + file);
    for (int repeat = 0; repeat < 2; ++repeat)
      if (run("'" + cli + "' " + args, out) != 0 || out != want || want.empty()) {
        note = std::string("golden mismatch: ") + args;
        return false;
      }
  }
  const int code = run("'" + cli + "' verify fusion --format json --input '" + golden + "/corrupt_stable4.json'", out);
  if (code != 1) {
    note = "corrupted input exited " + std::to_string(code);
    return false;
  }
  const auto j = nlohmann::json::parse(out, nullptr, false);
  if (j.is_discarded() || !j["violations"].is_array() || j["violations"].empty()) {
    note = "corrupted input reported no violations";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <greenring-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], golden = argv[2];
  struct Criterion {
    const char* title;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Criterion> criteria = {
      {"Dickson identities", c1},
      {"stable product oracle", c2},
      {"presented-ring axioms", c3},
      {"ranks and kernel lattice", c4},
      {"projection homomorphisms", c5},
      {"form non-degeneracy", c6},
      {"FPdim", c7},
      {"group-like axioms", c8},
      {"bi-Frobenius structure", c9},
      {"fusion transitivity", c10},
      {"CLI golden files", [&](std::string& note) { return c11(note, cli, golden); }},
  };
  std::vector<bool> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    results.push_back(guarded(criteria[i].check, note));
    // Criterion 3 also requires a clean integrality record so far.
    if (i == 2 && integrality_failures != 0) results.back() = false;
    std::cout << "criterion " << (i + 1) << ": " << (results.back() ? "PASS" : "FAIL") << "  " << criteria[i].title
              << (note.empty() ? "" : "  (" + note + ")") << std::endl;
  }
  int failed = 0;
  for (bool ok : results) failed += !ok;
  std::cout << "integrality assertion failures: " << integrality_failures << "\n";
  return failed == 0 && integrality_failures == 0 ? 0 : 1;
}
