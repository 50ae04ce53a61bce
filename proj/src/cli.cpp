#include "hodgeball/cli.hpp"

#include "hodgeball/eigen.hpp"
#include "hodgeball/formal_vhs.hpp"
#include "hodgeball/json_io.hpp"
#include "hodgeball/residue.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace hodgeball {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFalse = 2;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
    return out;
}

struct CommonFlags {
    std::string report = "table";
};

void add_report_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--report", flags.report, "output format")
        ->check(CLI::IsMember({"json", "table"}));
}

int cmd_jacobian(const std::string& poly, int dim, int tangent_degree, int tangent_vars,
                 const CommonFlags& flags, std::ostream& out) {
    Hypersurface x(dim, parse_polynomial(poly));
    auto pieces = hodge_numbers(x);

    std::optional<int> tangent_dim;
    if (tangent_degree > 0) {
        GradedQuotientRing ring = jacobian_ring(x);
        int nv = tangent_vars > 0 ? tangent_vars : ring.nvars();
        int count = 0;
        for (const auto& m : ring.graded_basis(tangent_degree)) {
            bool in_subring = true;
            for (int v = nv; v < ring.nvars(); ++v)
                if (m.exponent(v) > 0) in_subring = false;
            if (in_subring) ++count;
        }
        tangent_dim = count;
    }

    if (flags.report == "json") {
        nlohmann::json j;
        j["dim"] = x.dim;
        j["degree"] = x.degree;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& piece : pieces) {
            nlohmann::json row;
            row["k"] = piece.k;
            row["target_degree"] = piece.target_degree;
            row["h"] = piece.basis.size();
            rows.push_back(std::move(row));
        }
        j["pieces"] = std::move(rows);
        if (tangent_dim) j["tangent_dim"] = *tangent_dim;
        out << j.dump() << "\n";
    } else {
        out << "k\tdegree\th^{k," << x.dim << "-k}\n";
        for (const auto& piece : pieces)
            out << piece.k << "\t" << piece.target_degree << "\t" << piece.basis.size() << "\n";
        if (tangent_dim) out << "tangent\t" << tangent_degree << "\t" << *tangent_dim << "\n";
    }
    return kExitOk;
}

int cmd_balltype(const std::string& poly, int dim, int tangent_degree, int tangent_vars,
                 const CommonFlags& flags, std::ostream& out) {
    Hypersurface x(dim, parse_polynomial(poly));
    BallTypeOptions opts;
    if (tangent_degree > 0) opts.tangent_degree = tangent_degree;
    if (tangent_vars > 0) opts.tangent_vars = tangent_vars;
    BallTypeReport report = ball_type_check(x, opts);

    if (flags.report == "json") {
        out << ball_type_report_to_json(report).dump() << "\n";
    } else {
        out << "k\t" << report.k << "\nomega\t" << report.omega << "\nstar1_rank\t"
            << report.star1_rank << "\ntangent_dim\t" << report.tangent_dim << "\nstar1\t"
            << (report.star1 ? "true" : "false") << "\nstar2\t"
            << (report.star2 ? "true" : "false") << "\n";
        for (const auto& w : report.witnesses) out << "witness\t" << w << "\n";
    }
    return report.holds() ? kExitOk : kExitFalse;
}

int cmd_cover(const std::string& poly, int dim, int r, std::ostream& out) {
    Hypersurface x(dim, parse_polynomial(poly));
    Hypersurface cover = cyclic_cover(x, r > 0 ? r : x.degree);
    out << cover.defining.str() << "\n";
    return kExitOk;
}

int cmd_lu(const std::string& path, const CommonFlags& flags, std::ostream& out,
           std::ostream& err) {
    PeriodMatrix a = period_matrix_from_json(load_json_file(path));
    NPlusResult membership = nplus_membership(a);
    if (!membership.member) {
        err << "not in the N+ chart: leading principal block submatrix " << *membership.failing_k
            << " is singular\n";
        return kExitFalse;
    }
    BlockLU lu = block_lu(a);
    if (flags.report == "json") {
        nlohmann::json j;
        j["member"] = true;
        j["L"] = matrix_to_json(lu.lower);
        j["U"] = matrix_to_json(lu.upper);
        out << j.dump() << "\n";
    } else {
        out << "member\ttrue\n";
    }
    return kExitOk;
}

HorizontalData seeded_data(const std::string& family, std::uint64_t seed, int size) {
    if (family == "ball") return random_ball_type_data(seed, size);
    if (family == "cy") return random_cy_data(seed, size);
    throw std::invalid_argument("unknown family: " + family);
}

int cmd_orbit(const std::string& series_path, const std::string& family, std::uint64_t seed,
              int size, int order, const CommonFlags& flags, std::ostream& out) {
    BlockSeries phi;
    HodgeNumbers numbers;
    if (!series_path.empty()) {
        phi = series_from_json(load_json_file(series_path), &numbers);
    } else {
        HorizontalData data = seeded_data(family, seed, size);
        numbers = data.numbers;
        phi = nilpotent_orbit(data, order);
    }

    TransversalityReport trans = check_transversality(phi, numbers);
    OrderBoundReport bounds = check_order_bounds(phi, numbers);

    if (flags.report == "json") {
        nlohmann::json j;
        j["transversality"] = trans.pass;
        if (!trans.pass) j["transversality_witness"] = trans.detail;
        j["order_bounds"] = bounds.pass;
        if (!bounds.pass)
            j["order_bounds_witness"] = "block (" + std::to_string(bounds.alpha) + "," +
                                        std::to_string(bounds.beta) + "), monomial " +
                                        multiindex_key(bounds.index);
        out << j.dump() << "\n";
    } else {
        out << "transversality\t" << (trans.pass ? "true" : "false") << "\n";
        if (!trans.pass) out << "witness\t" << trans.detail << "\n";
        out << "order_bounds\t" << (bounds.pass ? "true" : "false") << "\n";
    }
    return trans.pass && bounds.pass ? kExitOk : kExitFalse;
}

int cmd_refine(const std::string& family, std::uint64_t seed, int size, int order,
               const std::string& point_text, const CommonFlags& flags, std::ostream& out) {
    HorizontalData data = seeded_data(family, seed, size);
    const int k = data.numbers.weight;  // h^{n,0} = 1 for both families
    SectionExpansion section = section_expansion(data, k, order);

    std::vector<GaussianRational> point;
    {
        std::istringstream in(point_text);
        std::string part;
        while (std::getline(in, part, ';')) point.push_back(parse_gaussian(part));
    }
    if (static_cast<int>(point.size()) != data.nvars())
        throw std::invalid_argument("need one coordinate per variable");

    RefinedPoint refined = refined_period(section.omega.evaluate(point), data.numbers, k);
    Rational hr2 = refined_hr2_value(refined);
    bool inside = ball_membership(refined);

    if (flags.report == "json") {
        nlohmann::json j;
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : refined.values) values.push_back(v.str());
        j["refined"] = std::move(values);
        j["hr2"] = hr2.str();
        j["inside"] = inside;
        out << j.dump() << "\n";
    } else {
        out << "hr2\t" << hr2.str() << "\ninside\t" << (inside ? "true" : "false") << "\n";
    }
    return inside ? kExitOk : kExitFalse;
}

int cmd_dm(const std::string& config_path, int m, int n, int mu_sum, bool skip_certification,
           const CommonFlags& flags, std::ostream& out) {
    std::optional<ArrangementData> data;
    if (!config_path.empty()) {
        data = arrangement_from_json(load_json_file(config_path), !skip_certification);
        m = data->m;
        n = data->n;
        mu_sum = data->mu_sum();
    } else if (m <= 0 || n < 0 || mu_sum <= 0) {
        throw std::invalid_argument("need --config or all of --m, --n, --mu-sum");
    }

    nlohmann::json j;
    j["m"] = m;
    j["n"] = n;
    j["mu_sum"] = mu_sum;
    j["total"] = dm_total_dim(m, n).convert_to<long long>();
    nlohmann::json rows = nlohmann::json::array();
    for (int p = n; p >= 0; --p) {
        nlohmann::json row;
        row["p"] = p;
        row["q"] = n - p;
        row["h"] = dm_hodge_numbers(m, n, mu_sum, p, n - p).convert_to<long long>();
        rows.push_back(std::move(row));
    }
    j["hodge"] = std::move(rows);
    if (data) {
        nlohmann::json eqs = nlohmann::json::array();
        for (const auto& f : arrangement_variety(*data)) eqs.push_back(f.str());
        j["equations"] = std::move(eqs);
    }

    if (flags.report == "json") {
        out << j.dump() << "\n";
    } else {
        out << "p\tq\th\n";
        for (const auto& row : j["hodge"])
            out << row["p"] << "\t" << row["q"] << "\t" << row["h"] << "\n";
        out << "total\t\t" << j["total"] << "\n";
    }
    return kExitOk;
}

int cmd_eigen_dims(const std::string& poly, int dim, const std::string& weights_text, int modulus,
                   const std::string& degrees_text, const CommonFlags& flags, std::ostream& out) {
    Hypersurface x(dim, parse_polynomial(poly));
    GradedQuotientRing ring = jacobian_ring(x);
    std::vector<int> weights = parse_int_list(weights_text);

    std::vector<int> degrees;
    if (!degrees_text.empty()) {
        degrees = parse_int_list(degrees_text);
    } else {
        int socle = (x.dim + 2) * (x.degree - 2);
        for (int d = 0; d <= socle; ++d) degrees.push_back(d);
    }

    nlohmann::json rows = nlohmann::json::array();
    if (flags.report == "table") {
        out << "degree";
        for (int chi = 0; chi < modulus; ++chi) out << "\tchi=" << chi;
        out << "\n";
    }
    for (int d : degrees) {
        nlohmann::json row;
        row["degree"] = d;
        nlohmann::json dims = nlohmann::json::array();
        if (flags.report == "table") out << d;
        for (int chi = 0; chi < modulus; ++chi) {
            int v = eigen_graded_dim(ring, weights, d, chi, modulus);
            dims.push_back(v);
            if (flags.report == "table") out << "\t" << v;
        }
        if (flags.report == "table") out << "\n";
        row["dims"] = std::move(dims);
        rows.push_back(std::move(row));
    }
    if (flags.report == "json") out << rows.dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact period-map and Jacobian-ring calculator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string poly, matrix_path, series_path, config_path, family = "ball";
    std::string weights_text, degrees_text, point_text;
    int dim = -1, tangent_degree = 0, tangent_vars = 0, cover_r = 0;
    int dm_m = 0, dm_n = -1, dm_mu_sum = 0, modulus = 1, size = 4, order = -1, jobs = 1;
    std::uint64_t seed = 1;
    bool skip_certification = false;

    auto* jacobian = app.add_subcommand("jacobian", "graded Jacobian-ring Hodge numbers");
    jacobian->add_option("--poly", poly)->required();
    jacobian->add_option("--dim", dim)->required();
    jacobian->add_option("--tangent-degree", tangent_degree);
    jacobian->add_option("--vars", tangent_vars, "leading variable count for the tangent piece");
    add_report_flag(jacobian, flags);

    auto* balltype = app.add_subcommand("balltype", "ball-type criterion check");
    balltype->add_option("--poly", poly)->required();
    balltype->add_option("--dim", dim)->required();
    balltype->add_option("--tangent-degree", tangent_degree);
    balltype->add_option("--vars", tangent_vars);
    add_report_flag(balltype, flags);

    auto* cover = app.add_subcommand("cover", "cyclic cover F + x_new^d");
    cover->add_option("--poly", poly)->required();
    cover->add_option("--dim", dim)->required();
    cover->add_option("--degree", cover_r);

    auto* lu = app.add_subcommand("lu", "N+ membership and block LU");
    lu->add_option("--matrix", matrix_path)->required();
    add_report_flag(lu, flags);

    auto* orbit = app.add_subcommand("orbit", "nilpotent orbit checkers");
    orbit->add_option("--series", series_path);
    orbit->add_option("--family", family)->check(CLI::IsMember({"ball", "cy"}));
    orbit->add_option("--seed", seed);
    orbit->add_option("--size", size);
    orbit->add_option("--order", order);
    orbit->add_option("--jobs", jobs);
    add_report_flag(orbit, flags);

    auto* refine = app.add_subcommand("refine", "refined period and ball membership");
    refine->add_option("--family", family)->check(CLI::IsMember({"ball", "cy"}));
    refine->add_option("--seed", seed);
    refine->add_option("--size", size);
    refine->add_option("--order", order);
    refine->add_option("--point", point_text, "semicolon-separated a+b*i coordinates")->required();
    add_report_flag(refine, flags);

    auto* dm = app.add_subcommand("dm", "Deligne-Mostow arrangement tables");
    dm->add_option("--config", config_path);
    dm->add_option("--m", dm_m);
    dm->add_option("--n", dm_n);
    dm->add_option("--mu-sum", dm_mu_sum);
    dm->add_flag("--skip-certification", skip_certification);
    add_report_flag(dm, flags);

    auto* eigen_dims = app.add_subcommand("eigen-dims", "eigen-graded dimension sweep");
    eigen_dims->add_option("--poly", poly)->required();
    eigen_dims->add_option("--dim", dim)->required();
    eigen_dims->add_option("--weights", weights_text)->required();
    eigen_dims->add_option("--modulus", modulus)->required();
    eigen_dims->add_option("--degrees", degrees_text);
    add_report_flag(eigen_dims, flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (order < 0) order = 5;
        if (jacobian->parsed())
            return cmd_jacobian(poly, dim, tangent_degree, tangent_vars, flags, out);
        if (balltype->parsed())
            return cmd_balltype(poly, dim, tangent_degree, tangent_vars, flags, out);
        if (cover->parsed()) return cmd_cover(poly, dim, cover_r, out);
        if (lu->parsed()) return cmd_lu(matrix_path, flags, out, err);
        if (orbit->parsed())
            return cmd_orbit(series_path, family, seed, size, order, flags, out);
        if (refine->parsed())
            return cmd_refine(family, seed, size, order, point_text, flags, out);
        if (dm->parsed())
            return cmd_dm(config_path, dm_m, dm_n, dm_mu_sum, skip_certification, flags, out);
        if (eigen_dims->parsed())
            return cmd_eigen_dims(poly, dim, weights_text, modulus, degrees_text, flags, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    err << "no subcommand\n";
    return kExitInput;
}

}  // namespace hodgeball
