#pragma once

#include "hodgeball/eigen.hpp"
#include "hodgeball/hodge_frame.hpp"
#include "hodgeball/period_domain.hpp"
#include "hodgeball/residue.hpp"
#include "hodgeball/series.hpp"

#include <json.hpp>

#include <string>

namespace hodgeball {

/// Matrices are arrays of arrays of "a+b*i" strings; keys are emitted in
/// alphabetical order so reports are byte-stable.
nlohmann::json matrix_to_json(const Mat& a);
Mat matrix_from_json(const nlohmann::json& j);

/// {"weight": n, "h": [...], "entries": [[...]]}
nlohmann::json period_matrix_to_json(const PeriodMatrix& a);
PeriodMatrix period_matrix_from_json(const nlohmann::json& j);

/// {"weight": n, "h": [...], "Q": [[...]], "basis": [[...]]}
nlohmann::json frame_to_json(const HodgeFrame& frame);
HodgeFrame frame_from_json(const nlohmann::json& j);

/// {"vars": N, "order": T, "h": [...], "coeffs": {"e1,...,eN": [[...]]}}
nlohmann::json series_to_json(const BlockSeries& s, const HodgeNumbers& numbers);
BlockSeries series_from_json(const nlohmann::json& j, HodgeNumbers* numbers_out = nullptr);

nlohmann::json ball_type_report_to_json(const BallTypeReport& report);

/// {"m": ..., "n": ..., "mu": ["1/6", ...], "coeffs": [[...]]}
ArrangementData arrangement_from_json(const nlohmann::json& j, bool certify_general_position = true);

nlohmann::json load_json_file(const std::string& path);

}  // namespace hodgeball
