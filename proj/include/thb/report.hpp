#pragma once

#include <string>

#include <json.hpp>

#include "thb/model.hpp"
#include "thb/normal_form.hpp"
#include "thb/simulator.hpp"

namespace thb {

using nlohmann::json;

/// Rounds through a "%.12g" print/parse cycle so every serialized number is
/// reproduced exactly by its own decimal representation.
double round12(double x);
std::string fmt12(double x);

json json_complex(cplx z);

json turing_report(const Equilibrium& eq, double d);
json hopf_report(const ModelParams& params);
json normal_form_report(const NormalFormAnalysis& an);
json pattern_json(const PatternLabel& pl);

/// The full analyze pipeline: equilibrium, assumption checks, Turing, Hopf at
/// the first Turing curve, Turing-Hopf point, normal form, planar unfolding,
/// bifurcation lines, warnings. Top-level key "schema": "thb/1".
json analysis_report(double a, double b, double d);

json error_json(const std::string& kind, const std::string& message);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace thb
