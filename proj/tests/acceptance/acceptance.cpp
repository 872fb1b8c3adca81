// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "tropjac/plfun.hpp"
#include "tropjac/torsors.hpp"
#include "tropjac/tropical_jacobian.hpp"

using namespace tropjac;
using namespace tropjac::testing;

namespace {

/// Collects the first few mismatches of a criterion.
struct Check {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ < 3) detail << "\n      " << what;
  }
};

MetricGraph loop(long n) {
  return MetricGraph(SharpFsMonoid::free(1), {"v0"}, {EdgeSpec{"e0", "v0", "v0", LatticeVector{n}}});
}

MetricGraph unit_cycle(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(vertex_name(i));
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(EdgeSpec{"e" + std::to_string(i), vertices[i], vertices[(i + 1) % n], LatticeVector{1}});
  return MetricGraph(SharpFsMonoid::free(1), vertices, edges);
}

std::string describe(const MetricGraph& g) {
  return std::to_string(g.vertex_count()) + "V/" + std::to_string(g.edge_count()) + "E";
}

/// The random corpus shared by criteria 2 and 3.
struct CorpusEntry {
  MetricGraph graph;
  std::optional<MetricGraph> subdivided;
};

std::vector<CorpusEntry> corpus() {
  std::mt19937 rng(20260101);
  std::vector<CorpusEntry> out;
  while (out.size() < 200) {
    MetricGraph g = random_graph_over_n(rng, 8, 9, 4);
    out.push_back({g, random_subdivision(rng, g)});
  }
  return out;
}

Check nodal_cubic() {
  Check c;
  for (long n = 1; n <= 20; ++n) {
    FgAbelianGroup j = trojac(loop(n)).group;
    c.expect(j == FgAbelianGroup::cyclic(n), "n = " + std::to_string(n) + ": got " + j.to_string());
  }
  return c;
}

Check subdivision_invariance(const std::vector<CorpusEntry>& graphs) {
  Check c;
  std::size_t subdivided = 0;
  for (const auto& entry : graphs) {
    if (!entry.subdivided) continue;
    ++subdivided;
    FgAbelianGroup before = trojac(entry.graph).group;
    FgAbelianGroup after = trojac(*entry.subdivided).group;
    c.expect(before == after, describe(entry.graph) + ": " + before.to_string() + " vs " + after.to_string());
  }
  c.expect(subdivided >= 150, "only " + std::to_string(subdivided) + " graphs had a subdividable edge");
  return c;
}

Check critical_group_oracle(const std::vector<CorpusEntry>& graphs) {
  Check c;
  for (const auto& entry : graphs) {
    FgAbelianGroup torsion = trojac(entry.graph).group.torsion();
    FgAbelianGroup oracle = critical_group(unit_subdivision(entry.graph));
    c.expect(torsion == oracle, describe(entry.graph) + ": " + torsion.to_string() + " vs " + oracle.to_string());
  }
  return c;
}

Check bounded_monodromy_oracle() {
  Check c;
  std::mt19937 rng(404);
  std::size_t bounded = 0, unbounded = 0;
  for (int trial = 0; trial < 500; ++trial) {
    SharpFsMonoid m = random_monoid(rng);
    LatticeVector ell = random_monoid_element(rng, m, 2);
    LatticeVector x(m.rank());
    // Half the time x lies on the same faces as ell, so bounded instances are common.
    if (uniform(rng, 0, 1)) {
      x = Integer(uniform(rng, -4, 4)) * ell;
      x += random_monoid_element(rng, m, 1);
      if (uniform(rng, 0, 1)) x = -x;
    } else {
      for (std::size_t i = 0; i < m.rank(); ++i) x[i] = uniform(rng, -5, 5);
    }
    const bool criterion = is_bounded_by(m, x, ell);
    const long bound = witness_bound(m, x, ell);
    const bool brute = brute_force_bounded(m, x, ell, criterion ? bound : bound + 1);
    (criterion ? bounded : unbounded) += 1;
    c.expect(criterion == brute, "x = " + x.to_string() + ", ell = " + ell.to_string());
  }
  c.expect(bounded >= 50 && unbounded >= 50,
           "unbalanced sample: " + std::to_string(bounded) + " bounded, " + std::to_string(unbounded) + " unbounded");
  return c;
}

/// Flattened coordinates back to per-basis-cycle values.
std::vector<LatticeVector> unflatten(const LatticeVector& flat, std::size_t genus, std::size_t k) {
  std::vector<LatticeVector> values(genus, LatticeVector(k));
  for (std::size_t i = 0; i < genus; ++i)
    for (std::size_t j = 0; j < k; ++j) values[i][j] = flat[i * k + j];
  return values;
}

Check specialization_soundness() {
  Check c;
  std::mt19937 rng(505);
  const SharpFsMonoid n1 = SharpFsMonoid::free(1);
  const SharpFsMonoid n2 = SharpFsMonoid::free(2);
  std::size_t inside = 0, outside = 0;
  for (int scenario = 0; scenario < 100; ++scenario) {
    // A random graph over N^2 plus a loop along one axis, so that bounded monodromy is a real constraint.
    MetricGraph base = random_graph(rng, n2, 5, 3, [](std::mt19937& r) { return random_free_length(r, 2, 3); });
    std::vector<EdgeSpec> specs = base.edge_specs();
    const std::string at =
        base.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(base.vertex_count()) - 1))];
    specs.push_back(
        EdgeSpec{"axis", at, at,
                 uniform(rng, 0, 1) ? LatticeVector{uniform(rng, 1, 3), 0} : LatticeVector{0, uniform(rng, 1, 3)}});
    MetricGraph g(n2, base.vertices(), specs);

    MonoidHom h{n2, n1, IntMatrix{{uniform(rng, 0, 2), uniform(rng, 0, 2)}}};
    if (h.matrix.is_zero()) h.matrix(0, 0) = 1;
    GraphMap contracted = contract(g, h);

    HomologyData hom = cycle_basis(g);
    IntMatrix lattice = bounded_sublattice(g, hom);
    const std::size_t genus = hom.basis.size();

    for (int s = 0; s < 3; ++s) {
      LatticeVector flat(genus * 2);
      for (std::size_t col = 0; col < lattice.cols(); ++col) flat += Integer(uniform(rng, -3, 3)) * lattice.column(col);
      TropCocycle f = make_cocycle(g, unflatten(flat, genus, 2));
      ++inside;
      try {
        TropCocycle pushed = specialize(f, h);
        bool matches = true;
        for (const auto& cyc : hom.basis) matches = matches && pushed(contracted.apply(cyc)) == h(f(cyc));
        c.expect(matches, "scenario " + std::to_string(scenario) + ": pushforward disagrees with h o f");
      } catch (const NotBoundedMonodromyError& e) {
        c.expect(false, "scenario " + std::to_string(scenario) + ": bounded cocycle rejected: " + e.what());
      }
    }

    for (int s = 0; s < 3; ++s) {
      LatticeVector flat(genus * 2);
      for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = uniform(rng, -3, 3);
      if (solve_integer(lattice, flat)) continue;
      ++outside;
      TropCocycle f = make_cocycle(g, unflatten(flat, genus, 2));
      try {
        specialize(f, h);
        c.expect(false, "scenario " + std::to_string(scenario) + ": unbounded cocycle accepted");
      } catch (const NotBoundedMonodromyError& e) {
        const MonodromyWitness& w = e.witness();
        const bool valid = is_cycle(g, w.cycle) && dot(w.inequality, cycle_length(g, w.cycle)) == 0 &&
                           dot(w.inequality, f(w.cycle)) != 0 && w.value == f(w.cycle);
        c.expect(valid, "scenario " + std::to_string(scenario) + ": invalid witness");
      }
    }
  }
  c.expect(inside >= 300 && outside >= 100,
           "too few cocycles: " + std::to_string(inside) + " inside, " + std::to_string(outside) + " outside");
  return c;
}

Check multidegree_and_harmonic() {
  Check c;
  for (std::size_t n = 3; n <= 12; ++n) {
    MetricGraph g = unit_cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<LatticeVector> values(n, LatticeVector{0});
      values[i] = LatticeVector{1};
      LatticeVector expected(n);
      expected[i] = -2;
      expected[(i + 1) % n] = 1;
      expected[(i + n - 1) % n] = 1;
      LatticeVector d = multidegree(g, make_pl(g, values));
      c.expect(d == expected, std::to_string(n) + "-cycle, vertex " + std::to_string(i) + ": " + d.to_string());
    }
  }
  std::mt19937 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    SharpFsMonoid m = random_monoid(rng);
    MetricGraph g = random_graph(rng, m, 6, 4, [&m](std::mt19937& r) {
      for (;;) {
        LatticeVector v = random_monoid_element(r, m, 2);
        if (!v.is_zero()) return v;
      }
    });
    std::size_t dim = harmonic_space(g).size();
    c.expect(dim == m.rank(),
             describe(g) + " over rank " + std::to_string(m.rank()) + ": dimension " + std::to_string(dim));
  }
  return c;
}

Check weil_pairing() {
  Check c;
  c.expect(weil_pairing_split(5, {2, 3}, {1, 1}) == 4, "((2,3),(1,1)) mod 5");
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    const auto idx = [n](std::int64_t x1, std::int64_t x2) { return static_cast<std::size_t>(x1 * n + x2); };
    const std::size_t size = static_cast<std::size_t>(n * n);
    std::vector<std::uint64_t> table(size * size);
    for (std::int64_t a1 = 0; a1 < n; ++a1)
      for (std::int64_t a2 = 0; a2 < n; ++a2)
        for (std::int64_t b1 = 0; b1 < n; ++b1)
          for (std::int64_t b2 = 0; b2 < n; ++b2)
            table[idx(a1, a2) * size + idx(b1, b2)] = weil_pairing_split(un, {a1, a2}, {b1, b2});
    auto w = [&](std::size_t a, std::size_t b) { return table[a * size + b]; };
    auto add = [&](std::size_t a, std::size_t b) {
      return idx((static_cast<std::int64_t>(a) / n + static_cast<std::int64_t>(b) / n) % n,
                 (static_cast<std::int64_t>(a) % n + static_cast<std::int64_t>(b) % n) % n);
    };
    bool bilinear = true, alternating = true, nondegenerate = true;
    for (std::size_t a = 0; a < size; ++a) {
      alternating = alternating && w(a, a) == 0;
      bool witnessed = a == 0;
      for (std::size_t b = 0; b < size; ++b) {
        if (w(a, b) != 0) witnessed = true;
        for (std::size_t x = 0; x < size; ++x)
          bilinear =
              bilinear && w(add(a, x), b) == (w(a, b) + w(x, b)) % un && w(b, add(a, x)) == (w(b, a) + w(b, x)) % un;
      }
      nondegenerate = nondegenerate && witnessed;
    }
    const std::string tag = "n = " + std::to_string(n);
    c.expect(bilinear, tag + ": not bilinear");
    c.expect(alternating, tag + ": not alternating");
    c.expect(nondegenerate, tag + ": degenerate");
  }
  return c;
}

Check torsor_goldens() {
  Check c;
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const long ln = static_cast<long>(n);
    FgAbelianGroup d = discrete_invariant(GroupDescriptor({MuN{n}}), loop(ln));
    c.expect(d == FgAbelianGroup::cyclic(ln), "mu_" + std::to_string(n) + ": " + d.to_string());
  }
  std::mt19937 rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    MetricGraph g = random_graph_over_n(rng, 6, 9, 4);
    const auto n = static_cast<std::uint64_t>(uniform(rng, 1, 30));
    FgAbelianGroup d = discrete_invariant(GroupDescriptor({ZmodN{n}}), g);
    c.expect(d.is_trivial(), "Z/" + std::to_string(n) + " on " + describe(g) + ": " + d.to_string());
  }
  static const std::uint64_t chars[] = {0, 2, 3, 5, 7, 11, 13};
  for (std::uint64_t ch : chars)
    for (std::uint64_t n = 1; n <= 30; ++n) {
      const BaseDescriptor base(ch, 1);
      const std::string tag = " at residue characteristic " + std::to_string(ch);
      c.expect(extendability(GroupDescriptor({MuN{n}}), base).kind == VerdictKind::GuaranteedUnique,
               "mu_" + std::to_string(n) + tag);
      if (ch == 0 || n % ch != 0)
        c.expect(extendability(GroupDescriptor({ZmodN{n}}), base).kind == VerdictKind::GuaranteedUnique,
                 "Z/" + std::to_string(n) + tag);
    }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    ExtensionVerdict v = extendability(GroupDescriptor({ZmodN{p}}), BaseDescriptor(p, 1));
    c.expect(v.kind == VerdictKind::NotGuaranteed && v.witness && v.witness->obstruction == "connected-to-discrete" &&
                 v.witness->factor == "Z/" + std::to_string(p),
             "Z/" + std::to_string(p) + " at its own residue characteristic");
  }
  return c;
}

Check alpha_p_calculator() {
  Check c;
  UnipotentDescriptor nodal = alpha_p_torsor_group(1, Bt1Descriptor{0, LocalLocal{3, 0, 0}});
  c.expect(nodal.alpha_p_copies == 1 && nodal.ga_copies == 0 && nodal.opaque_hom_copies == 0 &&
               nodal.to_string() == "alpha_3",
           "nodal cubic: " + nodal.to_string());
  std::mt19937 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h1 = static_cast<std::uint64_t>(uniform(rng, 0, 20));
    const auto r = static_cast<std::uint64_t>(uniform(rng, 0, 20));
    const auto d = static_cast<std::uint64_t>(uniform(rng, 0, 20));
    const bool known = uniform(rng, 0, 1);
    LocalLocal ll{5, d, known ? std::optional<std::uint64_t>(d) : std::nullopt};
    UnipotentDescriptor u = alpha_p_torsor_group(h1, Bt1Descriptor{r, ll});
    const std::uint64_t hom_part = known ? u.ga_copies : u.opaque_hom_copies;
    c.expect(u.alpha_p_copies == h1 + r && hom_part == d,
             "(" + std::to_string(h1) + ", " + std::to_string(r) + ", " + std::to_string(d) + "): " + u.to_string());
  }
  return c;
}

}  // namespace

int main() {
  bool all = true;
  std::vector<bool> passed(11, false);
  auto report = [&](int id, const std::string& name, const std::function<Check()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c = body();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    passed[static_cast<std::size_t>(id)] = c.failures == 0;
    all = all && c.failures == 0;
    std::printf("[%s] %2d %s (%zu checks, %zu failed, %.2fs)%s\n", c.failures == 0 ? "PASS" : "FAIL", id, name.c_str(),
                c.cases, c.failures, seconds, c.detail.str().c_str());
    std::fflush(stdout);
  };

  const std::vector<CorpusEntry> graphs = corpus();
  report(1, "nodal cubic: trojac(loop of length n) = Z/n for n = 1..20", nodal_cubic);
  report(2, "subdivision invariance on 200 random graphs over N", [&] { return subdivision_invariance(graphs); });
  report(3, "trojac torsion = critical group of the unit subdivision", [&] { return critical_group_oracle(graphs); });
  report(4, "face criterion agrees with brute-force boundedness search", bounded_monodromy_oracle);
  report(5, "specialize accepts bounded and rejects unbounded cocycles over N^2", specialization_soundness);
  report(6, "multidegree of vertex indicators; harmonic dimension = rank", multidegree_and_harmonic);
  report(7, "split Weil pairing bilinear, alternating, non-degenerate", weil_pairing);
  report(8, "torsor goldens: discrete invariants and extension verdicts", torsor_goldens);
  report(9, "alpha_p calculator: nodal cubic and additivity", alpha_p_calculator);
  report(10, "scheme-level claims covered by criteria 2, 3, 5, 8", [&] {
    Check c;
    for (int id : {2, 3, 5, 8})
      c.expect(passed[static_cast<std::size_t>(id)], "criterion " + std::to_string(id) + " failed");
    return c;
  });
  return all ? 0 : 1;
}
