#include "hodgeball/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hodgeball {

using nlohmann::json;

json matrix_to_json(const Mat& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("matrix must be an array of arrays");
    std::size_t rows = j.size(), cols = j[0].size();
    Mat a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            a.at(r, c) = parse_gaussian(j[r][c].get<std::string>());
    }
    return a;
}

namespace {

HodgeNumbers numbers_from_json(const json& j) {
    return HodgeNumbers(j.at("weight").get<int>(), j.at("h").get<std::vector<int>>());
}

}  // namespace

json period_matrix_to_json(const PeriodMatrix& a) {
    json j;
    j["weight"] = a.shape.numbers.weight;
    j["h"] = a.shape.numbers.h;
    j["entries"] = matrix_to_json(a.entries);
    return j;
}

PeriodMatrix period_matrix_from_json(const json& j) {
    return PeriodMatrix(matrix_from_json(j.at("entries")), BlockShape(numbers_from_json(j)));
}

json frame_to_json(const HodgeFrame& frame) {
    json j;
    j["weight"] = frame.weight();
    j["h"] = frame.numbers().h;
    j["Q"] = matrix_to_json(frame.polarization().Q);
    j["basis"] = matrix_to_json(frame.basis());
    return j;
}

HodgeFrame frame_from_json(const json& j) {
    HodgeNumbers numbers = numbers_from_json(j);
    Polarization q(numbers.weight, matrix_from_json(j.at("Q")));
    return HodgeFrame(std::move(numbers), std::move(q), matrix_from_json(j.at("basis")));
}

json series_to_json(const BlockSeries& s, const HodgeNumbers& numbers) {
    json j;
    j["vars"] = s.nvars();
    j["order"] = s.order();
    j["h"] = numbers.h;
    json coeffs = json::object();
    for (const auto& [e, c] : s.coeffs()) coeffs[multiindex_key(e)] = matrix_to_json(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

BlockSeries series_from_json(const json& j, HodgeNumbers* numbers_out) {
    int nvars = j.at("vars").get<int>();
    int order = j.at("order").get<int>();
    std::vector<int> h = j.at("h").get<std::vector<int>>();
    HodgeNumbers numbers(static_cast<int>(h.size()) - 1, h);
    if (numbers_out) *numbers_out = numbers;

    int m = numbers.m();
    BlockSeries s(nvars, order, m, m);
    for (const auto& [key, value] : j.at("coeffs").items()) {
        Mat c = matrix_from_json(value);
        if (static_cast<int>(c.rows()) != m || static_cast<int>(c.cols()) != m)
            throw std::invalid_argument("series coefficient shape mismatch");
        s.set_coeff(parse_multiindex(key, nvars), std::move(c));
    }
    return s;
}

json ball_type_report_to_json(const BallTypeReport& report) {
    json j;
    j["k"] = report.k;
    j["omega"] = report.omega;
    j["star1_rank"] = report.star1_rank;
    j["star1"] = report.star1;
    j["star2"] = report.star2;
    j["witnesses"] = report.witnesses;
    return j;
}

ArrangementData arrangement_from_json(const json& j, bool certify_general_position) {
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    std::vector<Rational> mu;
    for (const auto& w : j.at("mu")) mu.push_back(parse_rational(w.get<std::string>()));
    Mat coeffs = matrix_from_json(j.at("coeffs"));
    return ArrangementData(m, n, std::move(coeffs), std::move(mu), certify_general_position);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace hodgeball
