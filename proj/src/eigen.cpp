#include "hodgeball/eigen.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace hodgeball {

Character::Character(std::vector<int> group_orders, std::vector<int> chi)
    : orders(std::move(group_orders)), residues(std::move(chi)) {
    if (orders.size() != residues.size()) throw std::invalid_argument("character arity mismatch");
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) throw std::invalid_argument("non-positive group order");
        residues[i] = ((residues[i] % orders[i]) + orders[i]) % orders[i];
    }
}

int Character::exponent() const {
    int l = 1;
    for (int d : orders) l = std::lcm(l, d);
    return l;
}

int Character::index_of(const std::vector<int>& element) const {
    if (element.size() != orders.size()) throw std::invalid_argument("element arity mismatch");
    int l = exponent();
    long long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long g = ((element[i] % orders[i]) + orders[i]) % orders[i];
        idx = (idx + static_cast<long long>(residues[i]) * g * (l / orders[i])) % l;
    }
    return static_cast<int>(idx);
}

std::vector<int> eigenspace_diagonal(const std::vector<std::vector<int>>& indices,
                                     const Character& chi) {
    if (indices.size() != chi.orders.size())
        throw std::invalid_argument("one index row per generator required");
    std::size_t dim = indices.empty() ? 0 : indices[0].size();
    for (const auto& row : indices)
        if (row.size() != dim) throw std::invalid_argument("ragged eigen-index table");

    std::vector<int> matches;
    for (std::size_t r = 0; r < dim; ++r) {
        bool ok = true;
        for (std::size_t g = 0; g < indices.size(); ++g) {
            int d = chi.orders[g];
            if (((indices[g][r] % d) + d) % d != chi.residues[g]) ok = false;
        }
        if (ok) matches.push_back(static_cast<int>(r));
    }
    return matches;
}

Mat eigenspace_dense(const std::vector<Mat>& rep, const std::vector<GaussianRational>& values) {
    if (rep.empty()) throw std::invalid_argument("empty representation");
    if (rep.size() != values.size()) throw std::invalid_argument("one value per generator required");
    const std::size_t m = rep[0].rows();
    for (const auto& a : rep)
        if (a.rows() != m || a.cols() != m) throw std::invalid_argument("representation size mismatch");
    for (std::size_t i = 0; i < rep.size(); ++i)
        for (std::size_t j = i + 1; j < rep.size(); ++j)
            if (rep[i] * rep[j] != rep[j] * rep[i])
                throw std::invalid_argument("non-commuting generators");

    // Stack (rho(g) - chi(g) I) and take the joint kernel.
    Mat stacked(m * rep.size(), m);
    for (std::size_t g = 0; g < rep.size(); ++g) {
        Mat shifted = rep[g];
        for (std::size_t r = 0; r < m; ++r) shifted.at(r, r) -= values[g];
        stacked.set_submatrix(g * m, 0, shifted);
    }
    return stacked.kernel();
}

int eigen_graded_dim(const GradedQuotientRing& ring, const std::vector<int>& weights, int degree,
                     int chi_index, int modulus) {
    if (!ring.is_monomial_ideal())
        throw std::invalid_argument("diagonal action requires monomial basis");
    if (static_cast<int>(weights.size()) != ring.nvars())
        throw std::invalid_argument("one weight per variable required");
    if (modulus < 1) throw std::invalid_argument("non-positive modulus");

    int target = ((chi_index % modulus) + modulus) % modulus;
    int count = 0;
    for (const auto& mono : ring.graded_basis(degree)) {
        long long w = 0;
        for (int v = 0; v < ring.nvars(); ++v) w += static_cast<long long>(weights[v]) * mono.exponent(v);
        if (((w % modulus) + modulus) % modulus == target) ++count;
    }
    return count;
}

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

Int dm_hodge_numbers(int m, int n, int mu_sum, int p, int q) {
    if (p + q != n) throw std::invalid_argument("need p + q = n");
    return binomial(mu_sum - 1, p) * binomial(m - 1 - mu_sum, q);
}

Int dm_total_dim(int m, int n) {
    if (m < n + 2) throw std::invalid_argument("need m >= n+2");
    return binomial(m - 2, n);
}

ArrangementData::ArrangementData(int m_count, int dim, Mat a, std::vector<Rational> weights,
                                 bool certify_general_position)
    : m(m_count), n(dim), coeffs(std::move(a)), mu(std::move(weights)) {
    if (m < n + 2 || n < 0) throw std::invalid_argument("need m >= n+2 hyperplanes");
    if (static_cast<int>(coeffs.rows()) != m || static_cast<int>(coeffs.cols()) != n + 1)
        throw std::invalid_argument("coefficient matrix must be m x (n+1)");
    if (static_cast<int>(mu.size()) != m) throw std::invalid_argument("one weight per hyperplane");

    Rational total;
    for (const auto& w : mu) {
        if (w.sign() <= 0 || w >= Rational(1))
            throw std::invalid_argument("weights must lie strictly between 0 and 1");
        total += w;
    }
    if (total.den() != 1) throw std::invalid_argument("weight sum must be an integer");

    if (static_cast<int>(coeffs.rank()) != n + 1)
        throw std::invalid_argument("coefficient matrix not of full rank");

    if (certify_general_position) {
        // Every (n+1)-subset of rows must be independent.
        std::vector<int> pick(n + 1);
        for (int i = 0; i <= n; ++i) pick[i] = i;
        for (;;) {
            Mat minor(n + 1, n + 1);
            for (int r = 0; r <= n; ++r)
                for (int c = 0; c <= n; ++c) minor.at(r, c) = coeffs.at(pick[r], c);
            if (minor.det().is_zero())
                throw std::invalid_argument("hyperplanes not in general position");
            int pos = n;
            while (pos >= 0 && pick[pos] == m - (n + 1) + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i <= n; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
}

int ArrangementData::mu_sum() const {
    Rational total;
    for (const auto& w : mu) total += w;
    return total.num().convert_to<int>();
}

std::vector<Polynomial> arrangement_variety(const ArrangementData& data) {
    int d = lcd(data.mu).convert_to<int>();
    std::vector<Polynomial> out;
    for (int j = 0; j <= data.n; ++j) {
        Polynomial f(data.m);
        for (int i = 0; i < data.m; ++i) {
            const GaussianRational& a = data.coeffs.at(i, j);
            if (!a.is_real()) throw std::invalid_argument("arrangement coefficients must be rational");
            if (a.is_zero()) continue;
            f.add_term(Monomial::variable(data.m, i, d), a.re());
        }
        out.push_back(std::move(f));
    }
    return out;
}

EigenBallReport eigen_ball_conditions(const std::vector<int>& dims, int k, int tangent_dim) {
    const int len = static_cast<int>(dims.size());
    if (k < 1 || k >= len) throw std::invalid_argument("level k out of filtration range");
    for (int j = 1; j < len; ++j)
        if (dims[j] > dims[j - 1]) throw std::invalid_argument("filtration dims must be non-increasing");

    EigenBallReport report;
    report.vanishing_above = true;
    for (int j = k + 1; j < len; ++j)
        if (dims[j] != 0) report.vanishing_above = false;
    report.top_is_line = dims[k] == 1;
    report.tangent_matches = tangent_dim == dims[k - 1] - 1;
    report.stable_below = true;
    for (int j = 0; j < k; ++j)
        if (dims[j] != dims[k - 1]) report.stable_below = false;
    return report;
}

}  // namespace hodgeball
