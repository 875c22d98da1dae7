#pragma once

#include <string>

#include <json.hpp>

#include "rosecover/cover.hpp"
#include "rosecover/cw_check.hpp"
#include "rosecover/edge_slide.hpp"
#include "rosecover/homology.hpp"
#include "rosecover/matrix.hpp"
#include "rosecover/orbit_mover.hpp"

namespace rosecover {

using json = nlohmann::json;

/// Rationals are written as strings in lowest terms ("3", "-1/2").
std::string rational_to_string(const Rational &q);
/// Accepts "p", "p/q", with optional sign. Throws Parse.
Rational parse_rational(const std::string &text);
/// Comma-separated rationals.
QVector parse_rational_list(const std::string &text);

json to_json(const QVector &v);
json to_json(const QMatrix &m);
json to_json(const FiniteGroup &group);
json to_json(const EdgePath &path);
json to_json(const HomologyBasis &basis);
json to_json(const LiftedSlide &lifted);
json to_json(const MoveCertificate &cert);
json to_json(const CharacterReport &report);
json to_json(const IsotypicReport &report);

FiniteGroup group_from_json(const json &j, bool trusted = false);
EdgePath edge_path_from_json(const json &j);
QVector vector_from_json(const json &j);
QMatrix matrix_from_json(const json &j);
MoveCertificate certificate_from_json(const json &j);

} // namespace rosecover
