#pragma once
// Mechanical checks of the model hypotheses: invariance of the boundary
// sections, the chart killing the boundary, weight/degree consistency of
// the derivations, restriction compatibility, and multiplicity-freeness
// on a small sample of section spaces. Failures become report entries,
// never exceptions.

#include <string>
#include <vector>

#include "okounkov/decompose.hpp"
#include "okounkov/model.hpp"
#include "okounkov/report.hpp"

namespace okounkov {

inline Report validate_model(const VarietyModel& model, int sample_bound = 2) {
  Report rep;
  rep.check = "validate";
  rep.model = model.name;

  // boundary sections: invariant, weight zero, declared class
  if (model.r() == 0) {
    rep.add("boundary sections", true, "vacuous, r = 0");
  } else {
    for (std::size_t b = 0; b < model.r(); ++b) {
      const auto& bd = model.boundary[b];
      bool invariant = true;
      for (std::size_t op = 0; op < model.rank(); ++op) {
        invariant &= apply_derivation(model.action, ChevalleyOp::Raise, op, bd.section).is_zero();
        invariant &= apply_derivation(model.action, ChevalleyOp::Lower, op, bd.section).is_zero();
      }
      rep.add("s_" + std::to_string(b + 1) + " G-invariant", invariant);
      auto w = weight_of_polynomial(model.action, bd.section);
      rep.add("s_" + std::to_string(b + 1) + " weight zero",
              w.has_value() && *w == Weight(model.rank(), 0));
      auto deg = model.multidegree(bd.section);
      rep.add("s_" + std::to_string(b + 1) + " class",
              deg.has_value() && *deg == bd.cls,
              "declared " + divisor_to_string(bd.cls));
    }
    bool killed = true;
    for (const auto& bd : model.boundary)
      killed &= bd.section.substitute(model.chart_map).is_zero();
    rep.add("chart parametrization kills boundary sections", killed);
  }

  // derivation images: weight shifted by +- alpha_i, multidegree preserved
  bool weights_ok = true, degrees_ok = true;
  for (std::size_t op = 0; op < model.rank(); ++op) {
    const Weight& alpha = model.action.simple_roots[op];
    for (std::size_t j = 0; j < model.num_coords(); ++j) {
      for (ChevalleyOp which : {ChevalleyOp::Raise, ChevalleyOp::Lower}) {
        const Polynomial& img = which == ChevalleyOp::Raise
                                    ? model.action.raise_images[op][j]
                                    : model.action.lower_images[op][j];
        if (img.is_zero()) continue;
        Weight expect = model.action.coordinate_weights[j];
        for (std::size_t k = 0; k < expect.size(); ++k)
          expect[k] += (which == ChevalleyOp::Raise ? alpha[k] : -alpha[k]);
        auto w = weight_of_polynomial(model.action, img);
        weights_ok &= (w.has_value() && *w == expect);
        auto deg = model.multidegree(img);
        degrees_ok &= (deg.has_value() && *deg == model.coordinate_degrees[j]);
      }
    }
  }
  rep.add("derivation images shift weights by the simple roots", weights_ok);
  rep.add("derivation images preserve multidegrees", degrees_ok);

  rep.add("chart variable count = dimension - boundary count",
          model.chart_variables.size() == model.dimension - model.r());

  if (model.r() > 0) {
    const auto& rd = *model.restriction;
    rep.add("restriction target has dimension n - 1",
            rd.model->dimension + 1 == model.dimension);
    bool deg_ok = true;
    for (std::size_t j = 0; j < model.num_coords(); ++j) {
      auto deg = rd.model->multidegree(rd.images[j]);
      deg_ok &= (deg.has_value() && *deg == model.psi(model.coordinate_degrees[j]));
    }
    rep.add("restriction images have multidegree psi(deg)", deg_ok);
    bool chart_ok = true;
    for (std::size_t j = 0; j < model.num_coords(); ++j) {
      Polynomial composed = rd.images[j].substitute(rd.model->chart_map);
      chart_ok &= (composed == model.chart_map[j]);
    }
    rep.add("chart factors through the restriction", chart_ok);
  }

  // multiplicity-freeness and dimension bookkeeping on a sample grid
  bool decompose_ok = true;
  std::string detail;
  int spaces = 0;
  for (const auto& d : divisor_grid(model.picard_rank, sample_bound)) {
    if (!is_effective(model, d)) continue;
    try {
      auto pieces = decompose_sections(model, d);
      std::size_t total = 0;
      for (const auto& p : pieces) total += p.basis.size();
      if (total != section_space_basis(model, d).size()) {
        decompose_ok = false;
        detail = "dimension mismatch at " + divisor_to_string(d);
      }
      ++spaces;
    } catch (const std::exception& ex) {
      decompose_ok = false;
      detail = ex.what();
      break;
    }
  }
  rep.add("multiplicity-free decompositions on the sample grid", decompose_ok,
          decompose_ok ? std::to_string(spaces) + " section spaces" : detail);
  return rep;
}

}  // namespace okounkov
