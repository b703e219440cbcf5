#include "shk/analyze.hpp"

#include <algorithm>
#include <set>

#include "shk/certify.hpp"
#include "shk/combinatorial.hpp"
#include "shk/errors.hpp"
#include "shk/homology.hpp"
#include "shk/ideal_properties.hpp"
#include "shk/io.hpp"

namespace shk {

namespace {

const std::set<std::string> kComplexProps = {
    "vd",       "vdism",    "shellable", "scalable", "wc",   "cm",
    "icm",      "seqcm",    "depth",     "homology", "fvec", "dual",
    "shedding", "dismissing"};
const std::set<std::string> kIdealProps = {"divisible", "splittable", "lq",
                                           "dq",        "betti",      "profile",
                                           "dividing"};

struct PropRequest {
  std::string name;
  std::optional<std::string> argument;  // vertex/variable for per-vertex tests
};

std::vector<PropRequest> parse_props(const std::vector<std::string>& props,
                                     const std::set<std::string>& known) {
  std::vector<PropRequest> out;
  for (const std::string& raw : props) {
    if (raw == "all") {
      for (const std::string& name : known)
        if (name != "shedding" && name != "dismissing" && name != "dividing")
          out.push_back({name, std::nullopt});
      continue;
    }
    auto colon = raw.find(':');
    PropRequest req;
    req.name = colon == std::string::npos ? raw : raw.substr(0, colon);
    if (colon != std::string::npos) req.argument = raw.substr(colon + 1);
    if (!known.contains(req.name)) throw input_error("unknown property name: " + req.name);
    bool needs_arg = req.name == "shedding" || req.name == "dismissing" || req.name == "dividing";
    if (needs_arg && !req.argument)
      throw input_error("property " + req.name + " needs a vertex, e.g. " + req.name + ":a");
    if (!needs_arg && req.argument)
      throw input_error("property " + req.name + " takes no vertex argument");
    out.push_back(std::move(req));
  }
  return out;
}

Json decision_json(const Decision& d) {
  Json out;
  if (d.value.has_value())
    out["value"] = *d.value;
  else
    out["value"] = "unknown";
  out["method"] = d.exact ? "exact" : "heuristic";
  out["nodes"] = d.nodes;
  return out;
}

Json decision_json_with_cert(const Decision& d, const std::string& property,
                             const SimplicialComplex& subject, bool with_cert) {
  Json out = decision_json(d);
  if (with_cert && d.certificate)
    out["certificate"] = certificate_with_subject(*d.certificate, property, subject);
  return out;
}

Json decision_json_with_cert(const Decision& d, const std::string& property,
                             const MonomialIdeal& subject, bool with_cert) {
  Json out = decision_json(d);
  if (with_cert && d.certificate)
    out["certificate"] = certificate_with_subject(*d.certificate, property, subject);
  return out;
}

Json betti_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, count] : table.entries)
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", count}});
  return Json{{"entries", entries},
              {"regularity", table.regularity()},
              {"projective_dimension", table.projective_dimension()}};
}

SearchOptions search_options(const AnalyzeOptions& opts) { return {opts.budget}; }

}  // namespace

Json analyze_complex(const SimplicialComplex& c, const AnalyzeOptions& opts) {
  Json report;
  report["schema"] = 1;
  report["seed"] = opts.seed;
  report["input"] = Json{{"type", "complex"}, {"canonical", write_complex(c)}};
  if (c.is_void()) {
    report["dimensions"] = Json{{"void", true}};
    return report;
  }
  auto [d, md] = c.dimensions();
  Json dims{{"dim", d}, {"mdim", md}, {"pure", c.is_pure()}};
  report["dimensions"] = dims;

  Json props;
  SearchOptions sopts = search_options(opts);
  for (const PropRequest& req : parse_props(opts.props, kComplexProps)) {
    if (req.name == "vd") {
      props["vertex_decomposable"] =
          decision_json_with_cert(is_vertex_decomposable(c, sopts), "vertex_decomposable", c,
                                  opts.with_certificates);
    } else if (req.name == "vdism") {
      props["vertex_dismissible"] =
          decision_json_with_cert(is_vertex_dismissible(c, sopts), "vertex_dismissible", c,
                                  opts.with_certificates);
    } else if (req.name == "shellable") {
      props["shellable"] = decision_json_with_cert(is_shellable(c, sopts), "shellable", c,
                                                   opts.with_certificates);
    } else if (req.name == "scalable") {
      props["scalable"] = decision_json_with_cert(is_scalable(c, sopts), "scalable", c,
                                                  opts.with_certificates);
    } else if (req.name == "wc") {
      Json wc;
      wc["value"] = is_weakly_connected(c);
      if (opts.with_certificates) {
        auto cert = weak_connection_certificate(c);
        if (cert) wc["certificate"] = certificate_with_subject(*cert, "weakly_connected", c);
      }
      props["weakly_connected"] = wc;
    } else if (req.name == "cm") {
      Json per;
      for (const FieldSpec& f : opts.fields) per[f.name()] = is_cohen_macaulay(c, f);
      props["cohen_macaulay"] = per;
    } else if (req.name == "icm") {
      Json per;
      for (const FieldSpec& f : opts.fields) per[f.name()] = is_initially_cm(c, f);
      props["initially_cm"] = per;
    } else if (req.name == "seqcm") {
      Json per;
      for (const FieldSpec& f : opts.fields) per[f.name()] = is_sequentially_cm(c, f);
      props["sequentially_cm"] = per;
    } else if (req.name == "depth") {
      Json per;
      for (const FieldSpec& f : opts.fields) per[f.name()] = depth(c, f);
      props["depth"] = per;
    } else if (req.name == "homology") {
      Json per;
      for (const FieldSpec& f : opts.fields) {
        HomologyProfile prof = reduced_homology_ranks(c, f);
        Json ranks = Json::array();
        for (int dim = -1; dim <= c.dim(); ++dim) ranks.push_back(prof.rank_at(dim));
        per[f.name()] = Json{{"from_dim", -1}, {"ranks", ranks}};
      }
      props["homology"] = per;
    } else if (req.name == "fvec") {
      props["f_vector"] = c.f_vector();
    } else if (req.name == "dual") {
      props["alexander_dual_ideal"] = write_ideal(stanley_reisner_bridge(c).alexander_dual);
    } else if (req.name == "shedding") {
      props["shedding"][*req.argument] = is_shedding_vertex(c, c.vertices().id(*req.argument));
    } else if (req.name == "dismissing") {
      props["dismissing"][*req.argument] =
          is_dismissing_vertex(c, c.vertices().id(*req.argument));
    }
  }
  report["properties"] = props;
  return report;
}

Json analyze_ideal(const MonomialIdeal& ideal, const AnalyzeOptions& opts) {
  Json report;
  report["schema"] = 1;
  report["seed"] = opts.seed;
  report["input"] = Json{{"type", "ideal"}, {"canonical", write_ideal(ideal)}};
  Json stats{{"generators", ideal.generators().size()},
             {"squarefree", ideal.is_squarefree()},
             {"zero", ideal.is_zero()},
             {"unit", ideal.is_unit()}};
  if (ideal.is_proper_nonzero()) stats["degree"] = ideal.degree();
  report["ideal"] = stats;

  Json props;
  SearchOptions sopts = search_options(opts);
  for (const PropRequest& req : parse_props(opts.props, kIdealProps)) {
    if (req.name == "divisible") {
      props["vertex_divisible"] = decision_json_with_cert(
          is_vertex_divisible(ideal, sopts), "vertex_divisible", ideal, opts.with_certificates);
    } else if (req.name == "splittable") {
      props["vertex_splittable"] = decision_json_with_cert(
          is_vertex_splittable(ideal, sopts), "vertex_splittable", ideal, opts.with_certificates);
    } else if (req.name == "lq") {
      props["linear_quotients"] = decision_json_with_cert(
          has_linear_quotients(ideal, sopts), "linear_quotients", ideal, opts.with_certificates);
    } else if (req.name == "dq") {
      props["degree_quotients"] = decision_json_with_cert(
          has_degree_quotients(ideal, sopts), "degree_quotients", ideal, opts.with_certificates);
    } else if (req.name == "betti") {
      Json per;
      for (const FieldSpec& f : opts.fields) per[f.name()] = betti_json(graded_betti_numbers(ideal, f));
      props["betti"] = per;
    } else if (req.name == "profile") {
      Json per;
      for (const FieldSpec& f : opts.fields) {
        ResolutionProfile prof = resolution_profile(ideal, f);
        per[f.name()] = Json{{"reg", prof.reg},
                             {"deg", prof.deg},
                             {"degree_resolution", prof.degree_resolution},
                             {"linear_resolution", prof.linear_resolution},
                             {"componentwise_linear", prof.componentwise_linear}};
      }
      props["resolution"] = per;
    } else if (req.name == "dividing") {
      props["dividing"][*req.argument] =
          is_dividing_variable(ideal, ideal.ring().id(*req.argument));
    }
  }
  report["properties"] = props;
  return report;
}

Json analyze_graph(const Graph& g, const AnalyzeOptions& opts) {
  Json report;
  report["schema"] = 1;
  report["seed"] = opts.seed;
  report["input"] = Json{{"type", "graph"}, {"canonical", write_graph(g)}};
  std::vector<int> peo;
  bool chordal = is_chordal(g, &peo);
  Json graph_props{{"chordal", chordal}, {"cochordal", is_cochordal(g)}};
  if (chordal) {
    Json order = Json::array();
    for (int v : peo) order.push_back(g.vertices().label(v));
    graph_props["elimination_order"] = order;
  }
  report["graph"] = graph_props;
  SimplicialComplex ind = independence_complex(g);
  Json sub = analyze_complex(ind, opts);
  report["independence_complex"] = sub;
  return report;
}

Json analyze_file(const std::string& path, const AnalyzeOptions& opts) {
  std::string text = read_file(path);
  switch (kind_of_path(path)) {
    case InputKind::complex:
      return analyze_complex(parse_complex(text), opts);
    case InputKind::ideal:
      return analyze_ideal(parse_ideal(text), opts);
    case InputKind::graph:
      return analyze_graph(parse_graph(text), opts);
  }
  throw input_error("unreachable input kind");
}

namespace {

void render_value(std::string& out, const std::string& name, const Json& v, int indent);

void render_object(std::string& out, const Json& obj, int indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    render_value(out, it.key(), it.value(), indent);
}

void render_value(std::string& out, const std::string& name, const Json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (name == "certificate") {
    out += pad + "certificate: " + v["kind"].get<std::string>() + " (replayable)\n";
    return;
  }
  if (v.is_object()) {
    out += pad + name + ":\n";
    render_object(out, v, indent + 1);
  } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    out += pad + name + ":\n";
    std::string text = v.get<std::string>();
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      out += pad + "  | " + text.substr(start, end - start) + "\n";
      start = end + 1;
    }
  } else {
    out += pad + name + ": " + v.dump() + "\n";
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::string out;
  render_object(out, report, 0);
  return out;
}

std::string dualize_file(const std::string& path) {
  std::string text = read_file(path);
  switch (kind_of_path(path)) {
    case InputKind::complex: {
      SimplicialComplex c = parse_complex(text);
      return write_ideal(stanley_reisner_bridge(c).alexander_dual);
    }
    case InputKind::ideal: {
      MonomialIdeal ideal = parse_ideal(text);
      if (!ideal.is_squarefree())
        throw input_error("dualize needs a squarefree ideal (polarize first)");
      return write_complex(complex_of_ideal(ideal, IdealView::alexander_dual));
    }
    case InputKind::graph:
      throw input_error("dualize expects a .cx or .mi input");
  }
  throw input_error("unreachable input kind");
}

}  // namespace shk
