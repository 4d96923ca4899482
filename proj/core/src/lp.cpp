#include "tedpoly/lp.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "tedpoly/errors.hpp"

namespace tedpoly {

namespace {

/*
 * Fraction-free simplex tableau.
 *
 * Every stored entry is D times the corresponding entry of the ordinary
 * rational tableau, where D > 0 is the current basis determinant (up to the
 * row scaling applied on load).  Pivoting uses the integer update
 *
 *     t[i][j] <- (t[i][j] * p - t[i][s] * t[r][j]) / D,   D <- p,
 *
 * whose division is exact by Sylvester's identity.  Row `m` holds the
 * objective in z-row form: entry j is D * (reduced cost of column j), so a
 * column may enter when its entry is negative.
 *
 * Pricing is Dantzig's rule until a run of kDegenerateLimit consecutive
 * degenerate pivots, after which Bland's rule is used for the rest of the
 * solve.  Both rules are deterministic, and Bland's rule cannot cycle.
 *
 * Columns: [0, n) structural, [n, n + m) artificial, n + m right-hand side.
 */
class Tableau
{
public:
    Tableau(const ExactMatrix& a, const ExactVector& b)
        : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), t_((m_ + 1) * width_), det_(1), basis_(m_),
          row_scale_(m_)
    {
        for (std::size_t i = 0; i < m_; ++i)
        {
            BigInt scale = common_denominator(a.row(i));
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b[i].raw().get_den_mpz_t());
            if (b[i].sign() < 0)
                scale = -scale;
            row_scale_[i] = scale;

            for (std::size_t j = 0; j < n_; ++j)
                at(i, j) = scaled(a(i, j), scale);
            at(i, rhs_col()) = scaled(b[i], scale);
            at(i, n_ + i) = 1;
            basis_[i] = n_ + i;
        }
    }

    std::size_t rows() const { return m_; }
    std::size_t structural() const { return n_; }
    std::size_t pivots() const { return pivots_; }

    /** Phase I objective: maximize minus the sum of artificials. */
    void load_phase_one_objective()
    {
        for (std::size_t j = 0; j < width_; ++j)
            at(m_, j) = 0;
        for (std::size_t i = 0; i < m_; ++i)
        {
            for (std::size_t j = 0; j < n_; ++j)
                at(m_, j) -= at(i, j);
            at(m_, rhs_col()) -= at(i, rhs_col());
        }
    }

    /** Phase II objective from integer costs on structural columns. */
    void load_objective(const std::vector<BigInt>& cost)
    {
        for (std::size_t j = 0; j < width_; ++j)
        {
            BigInt sum = 0;
            for (std::size_t i = 0; i < m_; ++i)
            {
                if (basis_[i] < n_ && cost[basis_[i]] != 0)
                    sum += cost[basis_[i]] * at(i, j);
            }
            if (j < n_)
                sum -= cost[j] * det_;
            at(m_, j) = sum;
        }
    }

    /** Runs Bland's rule until optimal or unbounded; `stop_at_zero` ends Phase I early. */
    LpStatus optimize(bool stop_at_zero)
    {
        while (true)
        {
            if (stop_at_zero && sgn(at(m_, rhs_col())) == 0)
                return LpStatus::Optimal;

            const std::size_t enter = entering();
            if (enter == npos)
                return LpStatus::Optimal;
            const std::size_t leave = leaving(enter);
            if (leave == npos)
                return LpStatus::Unbounded;
            if (sgn(at(leave, rhs_col())) == 0)
            {
                if (++degenerate_run_ > kDegenerateLimit)
                    bland_ = true;
            }
            else
            {
                degenerate_run_ = 0;
            }
            pivot(leave, enter);
        }
    }

    /** Artificial sum is zero. */
    bool phase_one_feasible() const { return sgn(at(m_, rhs_col())) == 0; }

    /** Pivots zero-level artificials out of the basis where a structural column allows it. */
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (basis_[i] < n_)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
            {
                if (sgn(at(i, j)) != 0 && !is_basic(j))
                {
                    pivot(i, j);
                    break;
                }
            }
            // Otherwise the row is redundant: its structural entries are all
            // zero and stay zero under any later pivot.
        }
    }

    ExactVector primal() const
    {
        ExactVector x(n_);
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (basis_[i] < n_)
                x[basis_[i]] = Rational(at(i, rhs_col()), det_);
        }
        return x;
    }

    /** Farkas multipliers of the original (unscaled) rows after an infeasible Phase I. */
    ExactVector farkas() const
    {
        ExactVector y(m_);
        for (std::size_t i = 0; i < m_; ++i)
        {
            // z-row entry of artificial i is D * (y_i + 1) on the scaled rows.
            const Rational scaled_y = Rational(at(m_, n_ + i), det_) - Rational(1);
            y[i] = scaled_y * Rational(row_scale_[i]);
        }
        return y;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr std::size_t kDegenerateLimit = 50;

    static BigInt scaled(const Rational& v, const BigInt& scale)
    {
        BigInt out = v.numerator() * scale;
        mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), v.raw().get_den_mpz_t());
        return out;
    }

    std::size_t rhs_col() const { return n_ + m_; }
    BigInt& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

    bool is_basic(std::size_t j) const
    {
        for (std::size_t b : basis_)
            if (b == j)
                return true;
        return false;
    }

    /** Most negative reduced cost (lowest index on ties); first negative once in Bland mode. */
    std::size_t entering() const
    {
        std::size_t best = npos;
        for (std::size_t j = 0; j < n_; ++j)
        {
            if (sgn(at(m_, j)) >= 0)
                continue;
            if (bland_)
                return j;
            if (best == npos || cmp(at(m_, j), at(m_, best)) < 0)
                best = j;
        }
        return best;
    }

    std::size_t leaving(std::size_t s) const
    {
        std::size_t best = npos;
        BigInt lhs;
        BigInt rhs;
        for (std::size_t i = 0; i < m_; ++i)
        {
            if (sgn(at(i, s)) <= 0)
                continue;
            if (best == npos)
            {
                best = i;
                continue;
            }
            // ratio_i < ratio_best  <=>  rhs_i * col_best < rhs_best * col_i
            mpz_mul(lhs.get_mpz_t(), at(i, rhs_col()).get_mpz_t(), at(best, s).get_mpz_t());
            mpz_mul(rhs.get_mpz_t(), at(best, rhs_col()).get_mpz_t(), at(i, s).get_mpz_t());
            const int c = cmp(lhs, rhs);
            if (c < 0 || (c == 0 && basis_[i] < basis_[best]))
                best = i;
        }
        return best;
    }

    void pivot(std::size_t r, std::size_t s)
    {
        const BigInt p = at(r, s);
        BigInt tmp;
        for (std::size_t i = 0; i <= m_; ++i)
        {
            if (i == r)
                continue;
            BigInt* row = &t_[i * width_];
            const BigInt* prow = &t_[r * width_];
            const BigInt factor = row[s];
            const bool zero_factor = sgn(factor) == 0;
            for (std::size_t j = 0; j < width_; ++j)
            {
                mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
                if (!zero_factor && sgn(prow[j]) != 0)
                    mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), det_.get_mpz_t());
            }
        }
        det_ = p;
        if (sgn(det_) < 0)
        {
            for (auto& v : t_)
                mpz_neg(v.get_mpz_t(), v.get_mpz_t());
            det_ = -det_;
        }
        basis_[r] = s;
        ++pivots_;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<BigInt> t_;
    BigInt det_;
    std::vector<std::size_t> basis_;
    std::vector<BigInt> row_scale_;
    std::size_t pivots_ = 0;
    std::size_t degenerate_run_ = 0;
    bool bland_ = false;
};

void check_shape(const ExactMatrix& a, const ExactVector& b)
{
    if (a.rows() != b.size())
        throw DimensionError("constraint matrix has " + std::to_string(a.rows()) + " rows but rhs has "
                             + std::to_string(b.size()) + " entries");
}

}   // namespace

void LpProblem::validate() const
{
    check_shape(eq_matrix, eq_rhs);
    if (eq_matrix.cols() != objective.size())
        throw DimensionError("constraint matrix has " + std::to_string(eq_matrix.cols())
                             + " columns but objective has " + std::to_string(objective.size()) + " entries");
}

std::string_view to_string(LpStatus s)
{
    switch (s)
    {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

LpResult solve(const LpProblem& problem)
{
    problem.validate();
    Tableau tableau(problem.eq_matrix, problem.eq_rhs);

    tableau.load_phase_one_objective();
    tableau.optimize(false);
    if (!tableau.phase_one_feasible())
    {
        LpResult out;
        out.status = LpStatus::Infeasible;
        out.farkas = tableau.farkas();
        out.pivots = tableau.pivots();
        return out;
    }
    tableau.drive_out_artificials();

    const BigInt scale = common_denominator(problem.objective.view());
    std::vector<BigInt> cost(problem.var_count());
    for (std::size_t j = 0; j < cost.size(); ++j)
    {
        const Rational c = problem.objective[j] * Rational(scale);
        cost[j] = c.numerator();
    }
    tableau.load_objective(cost);

    LpResult out;
    out.status = tableau.optimize(false);
    out.solution = tableau.primal();
    out.pivots = tableau.pivots();
    if (!verify_feasible_point(problem.eq_matrix, problem.eq_rhs, out.solution))
        throw std::logic_error("simplex produced a point that violates the constraints");
    if (out.status == LpStatus::Optimal)
        out.value = dot(problem.objective, out.solution);
    return out;
}

FeasibilityResult feasible(const ExactMatrix& a, const ExactVector& b)
{
    check_shape(a, b);
    Tableau tableau(a, b);
    tableau.load_phase_one_objective();
    tableau.optimize(true);

    FeasibilityResult out;
    out.pivots = tableau.pivots();
    out.feasible = tableau.phase_one_feasible();
    if (out.feasible)
    {
        out.point = tableau.primal();
        if (!verify_feasible_point(a, b, out.point))
            throw std::logic_error("phase I produced a point that violates the constraints");
    }
    else
    {
        out.farkas = tableau.farkas();
    }
    return out;
}

bool verify_farkas(const ExactMatrix& a, const ExactVector& b, const ExactVector& y)
{
    if (y.size() != a.rows() || b.size() != a.rows())
        return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
        mpq_class sum = 0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            sum += y[i].raw() * a(i, j).raw();
        if (sgn(sum) < 0)
            return false;
    }
    return dot(y, b).sign() < 0;
}

bool verify_feasible_point(const ExactMatrix& a, const ExactVector& b, const ExactVector& x)
{
    if (x.size() != a.cols() || b.size() != a.rows())
        return false;
    for (const auto& v : x)
    {
        if (v.sign() < 0)
            return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        if (dot(a.row(i), x.view()) != b[i])
            return false;
    }
    return true;
}

void dump(std::ostream& os, const LpProblem& problem, std::string_view title)
{
    os << "# lp";
    if (!title.empty())
        os << ' ' << title;
    os << "\nvars " << problem.var_count() << "\nrows " << problem.row_count() << "\nmaximize";
    for (std::size_t j = 0; j < problem.var_count(); ++j)
    {
        if (!problem.objective[j].is_zero())
            os << ' ' << problem.objective[j] << "*x" << j;
    }
    os << '\n';
    for (std::size_t i = 0; i < problem.row_count(); ++i)
    {
        os << "row " << i << ':';
        for (std::size_t j = 0; j < problem.var_count(); ++j)
        {
            if (!problem.eq_matrix(i, j).is_zero())
                os << ' ' << problem.eq_matrix(i, j) << "*x" << j;
        }
        os << " = " << problem.eq_rhs[i] << '\n';
    }
    os << "bounds x >= 0\n";
}

}   // namespace tedpoly
