#include "subideal/seq_expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subideal {

struct SeqExpr::Node {
    Kind kind;
    Rational a;                   // p | r | c
    Rational b;                   // q
    std::vector<Rational> values; // Finite
    Index order = 1;              // Ampliate / Decimate
    std::optional<SeqExpr> lhs;   // inner for unary nodes
    std::optional<SeqExpr> rhs;
    // cached for log_eval: p, q for PowerLog; ln r, ln c for Geometric, Scale; ln v_i for Finite
    long double fa = 0.0L;
    long double fb = 0.0L;
    std::vector<long double> flogs;
};

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
const long double kLn2 = std::log(2.0L);

Index saturating_mul(Index a, Index b)
{
    Index r = 0;
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<Index>::max();
    return r;
}

Index ceil_div(Index n, Index m) { return n / m + (n % m != 0 ? 1 : 0); }

long double log_add(long double x, long double y)
{
    if (x == kNegInf) return y;
    if (y == kNegInf) return x;
    const long double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace

SeqExpr::SeqExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SeqExpr SeqExpr::power_log(Rational p, Rational q)
{
    p.canonicalize();
    q.canonicalize();
    if (sgn(p) < 0) throw DomainError("pow: exponent p must be >= 0, got " + render_rational(p));
    if (sgn(p) == 0 && sgn(q) <= 0)
        throw DomainError("pow: p = 0 requires q > 0 for a null sequence");
    if (sgn(q) < 0 && to_long_double(-q) > 2.0L * kLn2 * to_long_double(p))
        throw DomainError("pow: q = " + render_rational(q) +
                          " makes the sequence increase near n = 1 (need -q <= 2 ln2 p)");
    auto n = std::make_shared<Node>();
    n->kind = Kind::PowerLog;
    n->fa = to_long_double(p);
    n->fb = to_long_double(q);
    n->a = std::move(p);
    n->b = std::move(q);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::geometric(Rational r)
{
    r.canonicalize();
    if (sgn(r) <= 0 || r >= 1) throw DomainError("geo: ratio must lie in (0,1), got " + render_rational(r));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Geometric;
    n->fa = log_rational(r);
    n->a = std::move(r);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::finite(std::vector<Rational> values)
{
    if (values.empty()) throw DomainError("fin: needs at least one value");
    for (auto& v : values) v.canonicalize();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (sgn(values[i]) < 0) throw DomainError("fin: values must be non-negative");
        if (i > 0 && values[i] > values[i - 1]) throw DomainError("fin: values must be non-increasing");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Finite;
    for (const auto& v : values) n->flogs.push_back(sgn(v) == 0 ? kNegInf : log_rational(v));
    n->values = std::move(values);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::scale(Rational c, SeqExpr inner)
{
    c.canonicalize();
    if (sgn(c) <= 0) throw DomainError("scale: factor must be positive, got " + render_rational(c));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scale;
    n->fa = log_rational(c);
    n->a = std::move(c);
    n->lhs = std::move(inner);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::sum(SeqExpr a, SeqExpr b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::max(SeqExpr a, SeqExpr b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Max;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::product(SeqExpr a, SeqExpr b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::ampliate_node(Index m, SeqExpr inner)
{
    if (m == 0) throw DomainError("amp: order must be a positive integer");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Ampliate;
    n->order = m;
    n->lhs = std::move(inner);
    return SeqExpr(std::move(n));
}

SeqExpr SeqExpr::decimate_node(Index k, SeqExpr inner)
{
    if (k == 0) throw DomainError("dec: order must be a positive integer");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Decimate;
    n->order = k;
    n->lhs = std::move(inner);
    return SeqExpr(std::move(n));
}

SeqExpr::Kind SeqExpr::kind() const noexcept { return node_->kind; }

namespace {

[[noreturn]] void wrong_kind(const char* what)
{
    throw std::logic_error(std::string("SeqExpr accessor ") + what + " used on the wrong node kind");
}

} // namespace

const Rational& SeqExpr::exponent() const
{
    if (kind() != Kind::PowerLog) wrong_kind("exponent");
    return node_->a;
}

const Rational& SeqExpr::log_exponent() const
{
    if (kind() != Kind::PowerLog) wrong_kind("log_exponent");
    return node_->b;
}

const Rational& SeqExpr::ratio() const
{
    if (kind() != Kind::Geometric) wrong_kind("ratio");
    return node_->a;
}

const std::vector<Rational>& SeqExpr::values() const
{
    if (kind() != Kind::Finite) wrong_kind("values");
    return node_->values;
}

const Rational& SeqExpr::factor() const
{
    if (kind() != Kind::Scale) wrong_kind("factor");
    return node_->a;
}

Index SeqExpr::order() const
{
    if (kind() != Kind::Ampliate && kind() != Kind::Decimate) wrong_kind("order");
    return node_->order;
}

const SeqExpr& SeqExpr::inner() const
{
    if (kind() != Kind::Scale && kind() != Kind::Ampliate && kind() != Kind::Decimate) wrong_kind("inner");
    return *node_->lhs;
}

const SeqExpr& SeqExpr::lhs() const
{
    if (kind() != Kind::Sum && kind() != Kind::Max && kind() != Kind::Product) wrong_kind("lhs");
    return *node_->lhs;
}

const SeqExpr& SeqExpr::rhs() const
{
    if (kind() != Kind::Sum && kind() != Kind::Max && kind() != Kind::Product) wrong_kind("rhs");
    return *node_->rhs;
}

bool operator==(const SeqExpr& x, const SeqExpr& y)
{
    if (x.node_ == y.node_) return true;
    const auto& a = x.node();
    const auto& b = y.node();
    if (a.kind != b.kind) return false;
    using K = SeqExpr::Kind;
    switch (a.kind) {
    case K::PowerLog: return a.a == b.a && a.b == b.b;
    case K::Geometric: return a.a == b.a;
    case K::Finite: return a.values == b.values;
    case K::Scale: return a.a == b.a && *a.lhs == *b.lhs;
    case K::Ampliate:
    case K::Decimate: return a.order == b.order && *a.lhs == *b.lhs;
    case K::Sum:
    case K::Max:
    case K::Product: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    }
    return false;
}

std::string SeqExpr::to_string() const
{
    const auto& n = node();
    switch (n.kind) {
    case Kind::PowerLog:
        if (sgn(n.b) == 0) return "pow(" + render_rational(n.a) + ")";
        return "pow(" + render_rational(n.a) + "," + render_rational(n.b) + ")";
    case Kind::Geometric: return "geo(" + render_rational(n.a) + ")";
    case Kind::Finite: {
        std::string s = "fin(";
        for (std::size_t i = 0; i < n.values.size(); ++i) {
            if (i) s += ",";
            s += render_rational(n.values[i]);
        }
        return s + ")";
    }
    case Kind::Scale: return "scale(" + render_rational(n.a) + "," + n.lhs->to_string() + ")";
    case Kind::Ampliate: return "amp(" + std::to_string(n.order) + "," + n.lhs->to_string() + ")";
    case Kind::Decimate: return "dec(" + std::to_string(n.order) + "," + n.lhs->to_string() + ")";
    case Kind::Sum: return "sum(" + n.lhs->to_string() + "," + n.rhs->to_string() + ")";
    case Kind::Max: return "max(" + n.lhs->to_string() + "," + n.rhs->to_string() + ")";
    case Kind::Product: return "prod(" + n.lhs->to_string() + "," + n.rhs->to_string() + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------
// evaluation

bool Value::is_zero() const noexcept { return log == kNegInf; }

long double Value::approx() const noexcept { return is_zero() ? 0.0L : std::exp(log); }

std::optional<Rational> eval_exact(const SeqExpr& e, Index n)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::PowerLog: {
        if (sgn(e.log_exponent()) != 0 || e.exponent().get_den() != 1) return std::nullopt;
        if (!e.exponent().get_num().fits_ulong_p()) return std::nullopt;
        BigInt d;
        mpz_ui_pow_ui(d.get_mpz_t(), n, e.exponent().get_num().get_ui());
        return Rational(BigInt(1), d);
    }
    case K::Geometric: {
        Rational r;
        mpz_pow_ui(r.get_num_mpz_t(), e.ratio().get_num_mpz_t(), n);
        mpz_pow_ui(r.get_den_mpz_t(), e.ratio().get_den_mpz_t(), n);
        return r;
    }
    case K::Finite:
        if (n == 0 || n > e.values().size()) return Rational(0);
        return e.values()[n - 1];
    case K::Scale: {
        auto v = eval_exact(e.inner(), n);
        if (!v) return std::nullopt;
        return Rational(e.factor() * *v);
    }
    case K::Ampliate: return eval_exact(e.inner(), ceil_div(n, e.order()));
    case K::Decimate: return eval_exact(e.inner(), saturating_mul(n, e.order()));
    case K::Sum: {
        auto a = eval_exact(e.lhs(), n);
        if (!a) return std::nullopt;
        auto b = eval_exact(e.rhs(), n);
        if (!b) return std::nullopt;
        return Rational(*a + *b);
    }
    case K::Max: {
        auto a = eval_exact(e.lhs(), n);
        if (!a) return std::nullopt;
        auto b = eval_exact(e.rhs(), n);
        if (!b) return std::nullopt;
        return *a >= *b ? *a : *b;
    }
    case K::Product: {
        auto a = eval_exact(e.lhs(), n);
        if (a && sgn(*a) == 0) return Rational(0);
        auto b = eval_exact(e.rhs(), n);
        if (b && sgn(*b) == 0) return Rational(0);
        if (!a || !b) return std::nullopt;
        return Rational(*a * *b);
    }
    }
    return std::nullopt;
}

long double log_eval(const SeqExpr& e, Index n)
{
    using K = SeqExpr::Kind;
    const auto& nd = e.node();
    switch (nd.kind) {
    case K::PowerLog: {
        const long double x = static_cast<long double>(n);
        long double v = 0.0L;
        if (nd.fa != 0.0L) v -= nd.fa * std::log(x);
        if (nd.fb != 0.0L) v -= nd.fb * std::log(std::log1p(x));
        return v;
    }
    case K::Geometric: return static_cast<long double>(n) * nd.fa;
    case K::Finite: return n == 0 || n > nd.flogs.size() ? kNegInf : nd.flogs[n - 1];
    case K::Scale: {
        const long double v = log_eval(e.inner(), n);
        return v == kNegInf ? v : v + nd.fa;
    }
    case K::Ampliate: return log_eval(e.inner(), ceil_div(n, e.order()));
    case K::Decimate: return log_eval(e.inner(), saturating_mul(n, e.order()));
    case K::Sum: return log_add(log_eval(e.lhs(), n), log_eval(e.rhs(), n));
    case K::Max: return std::max(log_eval(e.lhs(), n), log_eval(e.rhs(), n));
    case K::Product: {
        const long double a = log_eval(e.lhs(), n);
        if (a == kNegInf) return a;
        const long double b = log_eval(e.rhs(), n);
        if (b == kNegInf) return b;
        return a + b;
    }
    }
    return kNegInf;
}

Value eval(const SeqExpr& e, Index n)
{
    if (n == 0) throw std::out_of_range("eval: indices start at 1");
    Value v;
    v.exact = eval_exact(e, n);
    if (v.exact)
        v.log = sgn(*v.exact) == 0 ? kNegInf : log_rational(*v.exact);
    else
        v.log = log_eval(e, n);
    return v;
}

// ---------------------------------------------------------------------------
// normalizing combinators

SeqExpr ampliate(const SeqExpr& e, Index m)
{
    if (m == 0) throw DomainError("amp: order must be a positive integer");
    if (m == 1) return e;
    if (e.kind() == SeqExpr::Kind::Ampliate) return ampliate(e.inner(), saturating_mul(m, e.order()));
    return SeqExpr::ampliate_node(m, e);
}

SeqExpr decimate(const SeqExpr& e, Index k)
{
    if (k == 0) throw DomainError("dec: order must be a positive integer");
    if (k == 1) return e;
    switch (e.kind()) {
    case SeqExpr::Kind::Decimate: return decimate(e.inner(), saturating_mul(k, e.order()));
    case SeqExpr::Kind::Ampliate: {
        // xi_{ceil(kn/m)}: exact when one order divides the other
        const Index m = e.order();
        if (m % k == 0) return ampliate(e.inner(), m / k);
        if (k % m == 0) return decimate(e.inner(), k / m);
        break;
    }
    default: break;
    }
    return SeqExpr::decimate_node(k, e);
}

SeqExpr multiply(const SeqExpr& a, const SeqExpr& b)
{
    using K = SeqExpr::Kind;
    if (a.kind() == K::Scale) return SeqExpr::scale(a.factor(), multiply(a.inner(), b));
    if (b.kind() == K::Scale) return SeqExpr::scale(b.factor(), multiply(a, b.inner()));
    if (a.kind() == K::PowerLog && b.kind() == K::PowerLog)
        return SeqExpr::power_log(a.exponent() + b.exponent(), a.log_exponent() + b.log_exponent());
    if (a.kind() == K::Geometric && b.kind() == K::Geometric)
        return SeqExpr::geometric(a.ratio() * b.ratio());
    if (a.kind() == K::Finite && b.kind() == K::Finite) {
        const auto len = std::min(a.values().size(), b.values().size());
        std::vector<Rational> v(len);
        for (std::size_t i = 0; i < len; ++i) v[i] = a.values()[i] * b.values()[i];
        return SeqExpr::finite(std::move(v));
    }
    return SeqExpr::product(a, b);
}

SeqExpr pointwise_power(const SeqExpr& e, unsigned n)
{
    if (n == 0) throw DomainError("pointwise power must be >= 1");
    SeqExpr acc = e;
    for (unsigned i = 1; i < n; ++i) acc = multiply(acc, e);
    return acc;
}

std::optional<SeqExpr> pointwise_sqrt(const SeqExpr& e)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::PowerLog: return SeqExpr::power_log(e.exponent() / 2, e.log_exponent() / 2);
    case K::Geometric: {
        Rational root;
        if (!rational_sqrt(e.ratio(), root)) return std::nullopt;
        return SeqExpr::geometric(root);
    }
    case K::Finite: {
        std::vector<Rational> v(e.values().size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!rational_sqrt(e.values()[i], v[i])) return std::nullopt;
        return SeqExpr::finite(std::move(v));
    }
    case K::Scale: {
        Rational root;
        if (!rational_sqrt(e.factor(), root)) return std::nullopt;
        auto inner = pointwise_sqrt(e.inner());
        if (!inner) return std::nullopt;
        return SeqExpr::scale(root, *inner);
    }
    case K::Ampliate: {
        auto inner = pointwise_sqrt(e.inner());
        if (!inner) return std::nullopt;
        return ampliate(*inner, e.order());
    }
    case K::Decimate: {
        auto inner = pointwise_sqrt(e.inner());
        if (!inner) return std::nullopt;
        return decimate(*inner, e.order());
    }
    case K::Product: {
        auto l = pointwise_sqrt(e.lhs());
        auto r = l ? pointwise_sqrt(e.rhs()) : std::nullopt;
        if (!l || !r) return std::nullopt;
        return multiply(*l, *r);
    }
    case K::Max: {
        auto l = pointwise_sqrt(e.lhs());
        auto r = l ? pointwise_sqrt(e.rhs()) : std::nullopt;
        if (!l || !r) return std::nullopt;
        return SeqExpr::max(*l, *r);
    }
    case K::Sum: return std::nullopt;
    }
    return std::nullopt;
}

bool eventually_zero(const SeqExpr& e)
{
    using K = SeqExpr::Kind;
    switch (e.kind()) {
    case K::PowerLog:
    case K::Geometric: return false;
    case K::Finite: return true;
    case K::Scale:
    case K::Ampliate:
    case K::Decimate: return eventually_zero(e.inner());
    case K::Sum:
    case K::Max: return eventually_zero(e.lhs()) && eventually_zero(e.rhs());
    case K::Product: return eventually_zero(e.lhs()) || eventually_zero(e.rhs());
    }
    return false;
}

} // namespace subideal
