#include "subideal/oracle.hpp"

#include "subideal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace subideal {

namespace {

constexpr long double kLogReconstructionTol = 1e-15L;

bool finite(std::complex<double> z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::vector<Index> sample_indices(Index first, Index last, int points = 16)
{
    ComparisonConfig cfg;
    cfg.window_first = first;
    cfg.window_last = last;
    cfg.grid_points = points;
    return sample_grid(cfg);
}

std::vector<std::pair<Index, double>> observe(const SeqExpr& a, const SeqExpr& b, Index first, Index last)
{
    const auto idx = sample_indices(first, last);
    std::vector<std::pair<Index, double>> out;
    for (const auto& s : kernels::parallel::sample_log_ratio(a, b, idx))
        out.emplace_back(s.index, static_cast<double>(std::exp(s.log_ratio)));
    return out;
}

std::string fmt(long double x)
{
    std::ostringstream os;
    os.precision(6);
    os << static_cast<double>(x);
    return os.str();
}

// c / x inside the grammar, when the atoms allow it
std::optional<SeqExpr> quotient(const SeqExpr& c, const SeqExpr& x)
{
    using K = SeqExpr::Kind;
    if (c.kind() == K::Scale) {
        auto q = quotient(c.inner(), x);
        if (!q) return std::nullopt;
        return SeqExpr::scale(c.factor(), *q);
    }
    if (x.kind() == K::Scale) {
        auto q = quotient(c, x.inner());
        if (!q) return std::nullopt;
        return SeqExpr::scale(1 / x.factor(), *q);
    }
    try {
        if (c.kind() == K::PowerLog && x.kind() == K::PowerLog)
            return SeqExpr::power_log(c.exponent() - x.exponent(), c.log_exponent() - x.log_exponent());
        if (c.kind() == K::Geometric && x.kind() == K::Geometric) return SeqExpr::geometric(c.ratio() / x.ratio());
    } catch (const DomainError&) {
    }
    return std::nullopt;
}

std::optional<SeqExpr> generator_of(const IdealDesc& i)
{
    const auto r = reduce(i);
    if (r.compact || r.finite_rank) return std::nullopt;
    if (r.principal) return r.principal;
    return r.soft;
}

struct FactorCheck {
    bool ok = false;
    std::string note;
};

FactorCheck check_factor(const char* label, const SeqExpr& x, const IdealDesc& ideal, Index n,
                         const EngineConfig& cfg)
{
    const auto v = member(x, ideal, cfg);
    if (!v.is_yes()) return {false, std::string(label) + " = " + x.to_string() + " is not confirmed in " + ideal.to_string()};

    const auto r = reduce(ideal);
    if (r.finite_rank && !r.compact) {
        const bool zero = eval(x, n).is_zero();
        return {zero, std::string(label) + (zero ? " vanishes" : " does not vanish") + " at the window end"};
    }
    if (r.compact) {
        // no generator to dominate by; the truncation can only show decay
        const auto head = log_eval(x, 1);
        const auto tail = kernels::parallel::log_values(x, std::max<Index>(1, n / 2), n);
        const auto top = *std::max_element(tail.begin(), tail.end());
        const bool decays = eventually_zero(x) || top < head;
        return {decays, std::string(label) + " max on upper half " + fmt(std::exp(top)) + " below x_1 = " +
                            fmt(std::exp(head))};
    }
    const SeqExpr g = *generator_of(ideal);
    const auto works = [&](Index m) { return detail::dominated(x, ampliate(g, m)); };
    if (!works(Index{1} << 40)) return {false, std::string(label) + " is not dominated by an ampliated generator"};
    const Index m = detail::minimal_order(works);
    const auto dom = ampliate(g, m);
    const auto w = ratio_witness(x, dom, cfg.compare);
    const auto rep = verify_domination(label, x, dom, w.constant, w.window.first, n);
    return {rep.passed, std::string(label) + " <= " + fmt(w.constant) + " * " + dom.to_string() + " on " +
                            std::to_string(rep.window.first) + ".." + std::to_string(n)};
}

} // namespace

TruncatedOperator TruncatedOperator::diagonal(std::vector<std::complex<double>> entries)
{
    if (entries.empty()) throw DomainError("truncated operator needs dimension >= 1");
    if (!std::all_of(entries.begin(), entries.end(), finite)) throw DomainError("non-finite diagonal entry");
    TruncatedOperator op;
    op.entries_ = std::move(entries);
    return op;
}

TruncatedOperator TruncatedOperator::diagonal_of(const SeqExpr& e, Index n)
{
    std::vector<std::complex<double>> d(n);
    for (Index i = 0; i < n; ++i) {
        const auto v = eval(e, i + 1);
        d[i] = v.exact ? v.exact->get_d() : static_cast<double>(v.approx());
    }
    return diagonal(std::move(d));
}

TruncatedOperator TruncatedOperator::dense(Eigen::MatrixXcd matrix)
{
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) throw DomainError("dense operator must be square, N >= 1");
    if (static_cast<Index>(matrix.rows()) > max_dense_dimension)
        throw DomainError("dense operator dimension exceeds " + std::to_string(max_dense_dimension));
    if (!matrix.allFinite()) throw DomainError("non-finite matrix entry");
    TruncatedOperator op;
    op.diagonal_ = false;
    op.matrix_ = std::move(matrix);
    return op;
}

Index TruncatedOperator::dimension() const noexcept
{
    return diagonal_ ? entries_.size() : static_cast<Index>(matrix_.rows());
}

const std::vector<std::complex<double>>& TruncatedOperator::entries() const
{
    if (!diagonal_) throw std::logic_error("dense operator has no diagonal entry list");
    return entries_;
}

const Eigen::MatrixXcd& TruncatedOperator::matrix() const
{
    if (diagonal_) throw std::logic_error("diagonal operator has no dense matrix");
    return matrix_;
}

std::vector<double> singular_values(const TruncatedOperator& op)
{
    std::vector<double> s;
    if (op.is_diagonal()) {
        s.reserve(op.dimension());
        for (const auto& z : op.entries()) s.push_back(std::abs(z));
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.matrix());
    const auto& v = svd.singularValues();
    s.assign(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

std::string to_string(OracleReport::Relation r)
{
    switch (r) {
    case OracleReport::Relation::Near: return "near";
    case OracleReport::Relation::AtLeast: return "at_least";
    case OracleReport::Relation::AtMost: return "at_most";
    }
    return {};
}

OracleReport verify_ratio_1_over_m(Index m, Index n, double tol)
{
    if (m == 0) throw DomainError("ampliation order must be >= 1");
    if (n == 0) throw DomainError("window bound must be >= 1");
    const auto a = SeqExpr::power_log(1);
    const auto b = ampliate(a, m);
    const Index first = std::max<Index>(1, n / 10);

    OracleReport rep;
    rep.name = "ratio_1_over_m(m=" + std::to_string(m) + ")";
    rep.window = {first, n};
    rep.target = 1.0 / static_cast<double>(m);
    rep.tolerance = tol;
    rep.relation = OracleReport::Relation::Near;
    rep.observed = observe(a, b, first, n);

    const auto ex = kernels::parallel::log_ratio_extrema(a, b, first, n);
    const long double target = 1.0L / m;
    const long double dev = std::max(std::fabs(std::exp(ex.max_log) - target), std::fabs(std::exp(ex.min_log) - target));
    rep.passed = dev <= tol;
    rep.note = "max deviation " + fmt(dev) + " over the whole window";
    return rep;
}

OracleReport verify_divergence_E2(Index m, Index n, double threshold)
{
    if (m == 0) throw DomainError("ampliation order must be >= 1");
    if (n == 0) throw DomainError("window bound must be >= 1");
    const auto a = SeqExpr::power_log(2);
    const auto b = ampliate(SeqExpr::power_log(3), m);
    const Index first = std::max<Index>(1, n / 2);

    OracleReport rep;
    rep.name = "divergence(m=" + std::to_string(m) + ")";
    rep.window = {first, n};
    rep.target = threshold;
    rep.tolerance = 0.0;
    rep.relation = OracleReport::Relation::AtLeast;
    rep.observed = observe(a, b, first, n);

    const auto ex = kernels::parallel::log_ratio_extrema(a, b, first, n);
    rep.passed = ex.min_log >= std::log(static_cast<long double>(threshold));
    rep.note = "min ratio " + fmt(std::exp(ex.min_log)) + " at n = " + std::to_string(ex.argmin);
    return rep;
}

OracleReport verify_product_split(const SeqExpr& c, const IdealDesc& i, const IdealDesc& j, Index n,
                                  const EngineConfig& cfg)
{
    if (n == 0) throw DomainError("dimension must be >= 1");
    const auto ij = reduce_product(IdealDesc::product(i, j));
    const auto pre = member(c, ij, cfg);
    if (!pre.is_yes())
        throw PreconditionError("verify_product_split: " + c.to_string() + " is not confirmed in " + ij.to_string());

    OracleReport rep;
    rep.name = "product_split(" + c.to_string() + ")";
    rep.window = {1, n};
    rep.target = 1.0;
    rep.tolerance = 0.0;
    rep.relation = OracleReport::Relation::Near;

    const auto ri = reduce(i);
    const auto rj = reduce(j);
    std::vector<std::pair<SeqExpr, SeqExpr>> candidates;
    const bool symmetric = i == j || (ri.compact && rj.compact);
    const auto root = pointwise_sqrt(c);
    if (symmetric && root) candidates.emplace_back(*root, *root);
    if (auto g = generator_of(i))
        if (auto y = quotient(c, *g)) candidates.emplace_back(*g, *y);
    if (auto g = generator_of(j))
        if (auto x = quotient(c, *g)) candidates.emplace_back(*x, *g);
    if (!symmetric && root) candidates.emplace_back(*root, *root);

    for (const auto& [x, y] : candidates) {
        if (!(multiply(x, y) == c)) continue;
        const auto fx = check_factor("x", x, i, n, cfg);
        if (!fx.ok) continue;
        const auto fy = check_factor("y", y, j, n, cfg);
        if (!fy.ok) continue;

        // exact entrywise reconstruction wherever the entries are rational
        bool exact = true;
        std::size_t checked = 0;
        long double log_error = 0.0L;
        auto idx = sample_indices(1, n, 32);
        for (Index k = 1; k <= std::min<Index>(n, 64); ++k) idx.push_back(k);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        for (Index k : idx) {
            const auto xe = eval_exact(x, k);
            const auto ye = eval_exact(y, k);
            const auto ce = eval_exact(c, k);
            if (xe && ye && ce) {
                ++checked;
                if (*xe * *ye != *ce) exact = false;
                rep.observed.emplace_back(k, *ce == 0 ? 1.0 : Rational(*xe * *ye / *ce).get_d());
            } else {
                const long double lc = log_eval(c, k);
                const long double lr = lc == -std::numeric_limits<long double>::infinity()
                                           ? 0.0L
                                           : log_eval(x, k) + log_eval(y, k) - lc;
                log_error = std::max(log_error, std::fabs(lr));
                rep.observed.emplace_back(k, static_cast<double>(std::exp(lr)));
            }
        }
        rep.passed = exact && log_error <= kLogReconstructionTol;
        rep.note = "x = " + x.to_string() + ", y = " + y.to_string() + "; x*y = c in normal form; " +
                   std::to_string(checked) + " sampled entries reconstructed exactly; max log error of the rest " +
                   fmt(log_error) + "; " + fx.note + "; " + fy.note;
        return rep;
    }
    rep.passed = false;
    rep.note = "no grammar split x*y = c with x in I and y in J was confirmed";
    return rep;
}

OracleReport verify_domination(std::string name, const SeqExpr& a, const SeqExpr& b, double constant, Index first,
                               Index last)
{
    OracleReport rep;
    rep.name = std::move(name);
    rep.window = {first, last};
    rep.target = constant;
    rep.tolerance = 1e-12;
    rep.relation = OracleReport::Relation::AtMost;
    if (first > last) {
        rep.passed = true;
        rep.note = "empty window";
        return rep;
    }
    rep.observed = observe(a, b, first, last);
    const auto ex = kernels::parallel::log_ratio_extrema(a, b, first, last);
    rep.passed = ex.max_log <= std::log(static_cast<long double>(constant)) + rep.tolerance;
    rep.note = "max ratio " + fmt(std::exp(ex.max_log)) + " at n = " + std::to_string(ex.argmax);
    return rep;
}

OracleReport verify_softness_witness(const SeqExpr& s, const SoftnessResult& res, Index n)
{
    if (!res.verdict.is_yes() || !res.witness_detail)
        throw PreconditionError("verify_softness_witness: needs a Yes verdict with a structured witness");
    const auto& w = *res.witness_detail;
    const auto rhs = SeqExpr::product(ampliate(s, w.k), w.t_witness);
    const Index first = std::max<Index>(1, res.verdict.witness().window.first);
    auto rep = verify_domination("softness_witness(k=" + std::to_string(w.k) + ", m=" + std::to_string(w.m) + ")", s,
                                 rhs, w.constant, first, n);
    rep.note += "; T = " + w.t_witness.to_string();
    return rep;
}

} // namespace subideal
