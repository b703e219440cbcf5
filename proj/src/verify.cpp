#include "shk/verify.hpp"

#include <algorithm>
#include <functional>

#include "shk/combinatorial.hpp"
#include "shk/errors.hpp"
#include "shk/homology.hpp"
#include "shk/ideal_properties.hpp"
#include "shk/io.hpp"
#include "shk/random_gen.hpp"

namespace shk {

namespace {

const std::vector<std::string> kAllChecks = {"hierarchy", "duality",   "skeletal",
                                             "cycles",    "cochordal", "mdim1",
                                             "truncation", "polarization"};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<FieldSpec> all_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
          FieldSpec::prime(32003)};
}

struct CheckContext {
  const VerifyOptions& opts;
  CheckOutcome outcome;

  void violation(const std::string& detail) {
    ++outcome.violations;
    if (outcome.violation_dumps.size() < 16) outcome.violation_dumps.push_back(detail);
  }

  // Runs one trial body, translating capacity limits into reported skips.
  template <typename Fn>
  void trial(Fn&& body) {
    ++outcome.trials;
    try {
      body();
    } catch (const capacity_error&) {
      ++outcome.capacity_skips;
    }
  }
};

int effective_max_size(const VerifyOptions& o) {
  return o.max_size > 0 ? o.max_size : std::min(5, std::max(1, o.vertices - 1));
}

std::string side_note(const std::string& name, bool value) {
  return name + "=" + (value ? "true" : "false");
}

// --- hierarchy ---------------------------------------------------------------

void check_hierarchy(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      SimplicialComplex c =
          random_complex(rng, o.vertices, o.facets, o.min_size, effective_max_size(o));
      if (c.is_void()) return;
      bool vd = is_vertex_decomposable(c).is_true();
      bool vdism = is_vertex_dismissible(c).is_true();
      bool shell = is_shellable(c).is_true();
      bool scal = is_scalable(c).is_true();
      auto dump = [&](const std::string& what) {
        ctx.violation(what + "\n" + write_complex(c));
      };
      if (vd && !vdism) dump("vertex decomposable but not vertex dismissible");
      if (vdism && !scal) dump("vertex dismissible but not scalable");
      if (shell && !scal) dump("shellable but not scalable");
      if (c.is_pure() && scal != shell) dump("pure complex: scalable and shellable disagree");
      for (const FieldSpec& f : all_fields()) {
        bool icm = is_initially_cm(c, f);
        if (scal && !icm) dump("scalable but not initially CM over " + f.name());
        if (c.is_pure() && scal && !is_cohen_macaulay(c, f))
          dump("pure scalable but not CM over " + f.name());
      }
      MonomialIdeal dual = stanley_reisner_bridge(c).alexander_dual;
      if (dual.is_proper_nonzero()) {
        bool split = is_vertex_splittable(dual).is_true();
        bool lq = has_linear_quotients(dual).is_true();
        if (split && !lq) dump("vertex splittable dual without linear quotients");
        if (lq) {
          for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
            if (!resolution_profile(dual, f).componentwise_linear)
              dump("linear quotients but not componentwise linear over " + f.name());
          }
        }
      }
    });
  }
}

// --- duality -------------------------------------------------------------------

void check_duality(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      SimplicialComplex c =
          random_complex(rng, o.vertices, o.facets, o.min_size, effective_max_size(o));
      if (c.is_void()) return;
      MonomialIdeal dual = stanley_reisner_bridge(c).alexander_dual;
      bool vdism = is_vertex_dismissible(c).is_true();
      bool scal = is_scalable(c).is_true();
      if (dual.is_proper_nonzero()) {
        bool divisible = is_vertex_divisible(dual).is_true();
        bool dq = has_degree_quotients(dual).is_true();
        if (vdism != divisible)
          ctx.violation("vertex dismissible vs vertex divisible dual: " +
                        side_note("complex", vdism) + " " + side_note("ideal", divisible) +
                        "\n" + write_complex(c) + write_ideal(dual));
        if (scal != dq)
          ctx.violation("scalable vs degree quotients dual: " + side_note("complex", scal) +
                        " " + side_note("ideal", dq) + "\n" + write_complex(c) +
                        write_ideal(dual));
        for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
          bool icm = is_initially_cm(c, f);
          bool degres = resolution_profile(dual, f).degree_resolution;
          if (icm != degres)
            ctx.violation("initially CM vs degree resolution over " + f.name() + ": " +
                          side_note("complex", icm) + " " + side_note("ideal", degres) +
                          "\n" + write_complex(c) + write_ideal(dual));
        }
      } else if (!vdism || !scal) {
        // Dual of a full simplex is the unit ideal; both properties hold.
        ctx.violation("simplex not classified as dismissible and scalable\n" +
                      write_complex(c));
      }
    });
  }
}

// --- skeletal -------------------------------------------------------------------

void check_skeletal(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      SimplicialComplex c =
          random_complex(rng, o.vertices, o.facets, o.min_size, effective_max_size(o));
      if (c.is_void()) return;
      SimplicialComplex skel = c.skeleton(c.mdim(), SkeletonMode::pure);
      bool vdism = is_vertex_dismissible(c).is_true();
      bool vd_skel = is_vertex_decomposable(skel).is_true();
      if (vdism != vd_skel)
        ctx.violation("vertex dismissible vs decomposable skeleton: " +
                      side_note("complex", vdism) + " " + side_note("skeleton", vd_skel) +
                      "\n" + write_complex(c));
      bool scal = is_scalable(c).is_true();
      bool shell_skel = is_shellable(skel).is_true();
      if (scal != shell_skel)
        ctx.violation("scalable vs shellable skeleton: " + side_note("complex", scal) + " " +
                      side_note("skeleton", shell_skel) + "\n" + write_complex(c));
    });
  }
}

// --- cycles ---------------------------------------------------------------------

void check_cycles(CheckContext& ctx, Rng&) {
  for (int n = 3; n <= 12; ++n) {
    ctx.trial([&] {
      SimplicialComplex ind = independence_complex(cycle_graph(n));
      CycleExpectation expect = classify_cycle(n);
      if (ind.mdim() != expect.mdim)
        ctx.violation("cycle " + std::to_string(n) + ": mdim " + std::to_string(ind.mdim()) +
                      " expected " + std::to_string(expect.mdim));
      bool vdism = is_vertex_dismissible(ind).is_true();
      bool scal = is_scalable(ind).is_true();
      if (vdism != expect.vertex_dismissible)
        ctx.violation("cycle " + std::to_string(n) + ": vertex dismissible " +
                      side_note("got", vdism));
      if (scal != expect.vertex_dismissible)
        ctx.violation("cycle " + std::to_string(n) + ": scalable " + side_note("got", scal));
      for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        bool icm = is_initially_cm(ind, f);
        if (icm != expect.vertex_dismissible)
          ctx.violation("cycle " + std::to_string(n) + ": initially CM over " + f.name() +
                        " " + side_note("got", icm));
      }
    });
  }
}

// --- cochordal / mdim1: the four-way equality -------------------------------------

void four_way_equality(CheckContext& ctx, const SimplicialComplex& c, const std::string& label) {
  bool wc = is_weakly_connected(c);
  bool vdism = is_vertex_dismissible(c).is_true();
  bool scal = is_scalable(c).is_true();
  auto dump = [&](const std::string& what) {
    ctx.violation(label + ": " + what + "\n" + write_complex(c));
  };
  if (wc != vdism) dump(side_note("weakly_connected", wc) + " " + side_note("vertex_dismissible", vdism));
  if (wc != scal) dump(side_note("weakly_connected", wc) + " " + side_note("scalable", scal));
  for (const FieldSpec& f : all_fields()) {
    bool icm = is_initially_cm(c, f);
    if (wc != icm)
      dump(side_note("weakly_connected", wc) + " " + side_note("initially_cm_" + f.name(), icm));
  }
}

void check_cochordal(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  int n = std::min(o.vertices + 2, 8);
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      Graph g = random_cochordal_graph(rng, std::max(2, n));
      four_way_equality(ctx, independence_complex(g), "cochordal");
    });
  }
}

void check_mdim1(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      SimplicialComplex c = random_mdim1_complex(rng, o.vertices, o.facets);
      four_way_equality(ctx, c, "mdim1");
    });
  }
}

// --- truncation --------------------------------------------------------------------

void check_truncation(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      MonomialIdeal ideal =
          random_squarefree_ideal(rng, std::min(o.vertices, 7), std::max(2, o.facets / 2), 2, 4);
      if (!ideal.is_proper_nonzero()) return;
      int k = ideal.degree();
      MonomialIdeal trunc = squarefree_truncation(ideal, k, TruncationMode::at_least);
      bool divisible = is_vertex_divisible(ideal).is_true();
      bool split_k = is_vertex_splittable(trunc).is_true();
      if (divisible != split_k)
        ctx.violation("vertex divisible vs splittable truncation: " +
                      side_note("ideal", divisible) + " " + side_note("truncation", split_k) +
                      "\n" + write_ideal(ideal) + write_ideal(trunc));
      bool dq = has_degree_quotients(ideal).is_true();
      bool lq_k = has_linear_quotients(trunc).is_true();
      if (dq != lq_k)
        ctx.violation("degree quotients vs linear quotients truncation: " +
                      side_note("ideal", dq) + " " + side_note("truncation", lq_k) + "\n" +
                      write_ideal(ideal) + write_ideal(trunc));
    });
  }
}

// --- polarization -------------------------------------------------------------------

void check_polarization(CheckContext& ctx, Rng& rng) {
  const VerifyOptions& o = ctx.opts;
  for (int t = 0; t < o.trials; ++t) {
    ctx.trial([&] {
      MonomialIdeal ideal = random_nonsquarefree_ideal(rng, std::min(o.vertices, 5),
                                                       std::max(2, std::min(o.facets / 2, 4)), 2);
      MonomialIdeal pol = polarize(ideal);
      bool div_a = is_vertex_divisible(ideal).is_true();
      bool div_b = is_vertex_divisible(pol).is_true();
      if (div_a != div_b)
        ctx.violation("vertex divisible changes under polarization\n" + write_ideal(ideal) +
                      write_ideal(pol));
      bool dq_a = has_degree_quotients(ideal).is_true();
      bool dq_b = has_degree_quotients(pol).is_true();
      if (dq_a != dq_b)
        ctx.violation("degree quotients change under polarization\n" + write_ideal(ideal) +
                      write_ideal(pol));
      for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        BettiTable ta = graded_betti_numbers(ideal, f);
        BettiTable tb = graded_betti_numbers(pol, f);
        if (!(ta == tb))
          ctx.violation("Betti table changes under polarization over " + f.name() + "\n" +
                        write_ideal(ideal) + write_ideal(pol));
        bool res_a = ta.regularity() == ideal.degree();
        bool res_b = tb.regularity() == pol.degree();
        if (res_a != res_b)
          ctx.violation("degree resolution changes under polarization over " + f.name() +
                        "\n" + write_ideal(ideal) + write_ideal(pol));
      }
    });
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  std::vector<std::string> selected = opts.checks.empty() ? kAllChecks : opts.checks;
  for (const std::string& name : selected)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), name) == kAllChecks.end())
      throw input_error("unknown check: " + name);
  if (opts.vertices < 1 || opts.vertices > 12)
    throw input_error("verify supports 1..12 vertices");

  VerifyReport report;
  for (const std::string& name : kAllChecks) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    CheckContext ctx{opts, {}};
    ctx.outcome.name = name;
    Rng rng(opts.seed ^ fnv1a(name));
    if (name == "hierarchy") check_hierarchy(ctx, rng);
    if (name == "duality") check_duality(ctx, rng);
    if (name == "skeletal") check_skeletal(ctx, rng);
    if (name == "cycles") check_cycles(ctx, rng);
    if (name == "cochordal") check_cochordal(ctx, rng);
    if (name == "mdim1") check_mdim1(ctx, rng);
    if (name == "truncation") check_truncation(ctx, rng);
    if (name == "polarization") check_polarization(ctx, rng);
    report.checks.push_back(std::move(ctx.outcome));
  }
  return report;
}

Json verify_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckOutcome& c : report.checks) {
    Json dumps = Json::array();
    for (const std::string& d : c.violation_dumps) dumps.push_back(d);
    checks.push_back(Json{{"check", c.name},
                          {"trials", c.trials},
                          {"violations", c.violations},
                          {"capacity_skips", c.capacity_skips},
                          {"violation_dumps", dumps}});
  }
  return Json{{"schema", 1}, {"checks", checks}, {"ok", report.ok()}};
}

std::string verify_to_text(const VerifyReport& report) {
  std::string out;
  for (const CheckOutcome& c : report.checks) {
    out += "check " + c.name + ": trials=" + std::to_string(c.trials) +
           " violations=" + std::to_string(c.violations) +
           " capacity_skips=" + std::to_string(c.capacity_skips) + "\n";
    for (const std::string& d : c.violation_dumps) {
      out += "--- violation ---\n" + d;
      if (!d.empty() && d.back() != '\n') out += "\n";
    }
  }
  out += report.ok() ? "all checks passed\n" : "violations found\n";
  return out;
}

}  // namespace shk
