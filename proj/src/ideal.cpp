#include "subideal/ideal.hpp"

#include "subideal/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subideal {

struct IdealDesc::Node {
    Kind kind;
    std::optional<SeqExpr> gen;
    std::optional<IdealDesc> lhs;
    std::optional<IdealDesc> rhs;
    unsigned exponent = 1;
};

IdealDesc::IdealDesc(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

IdealDesc IdealDesc::principal(SeqExpr gen)
{
    if (log_eval(gen, 1) == -std::numeric_limits<long double>::infinity())
        throw DomainError("prin: the zero sequence generates the zero ideal, which is not supported");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Principal;
    n->gen = std::move(gen);
    return IdealDesc(std::move(n));
}

IdealDesc IdealDesc::compact()
{
    static const IdealDesc k = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Compact;
        return IdealDesc(std::move(n));
    }();
    return k;
}

IdealDesc IdealDesc::finite_rank()
{
    static const IdealDesc f = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::FiniteRank;
        return IdealDesc(std::move(n));
    }();
    return f;
}

IdealDesc IdealDesc::product(IdealDesc a, IdealDesc b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return IdealDesc(std::move(n));
}

IdealDesc IdealDesc::sum(IdealDesc a, IdealDesc b)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return IdealDesc(std::move(n));
}

IdealDesc IdealDesc::power(IdealDesc base, unsigned exponent)
{
    if (exponent == 0) throw DomainError("pow: ideal exponent must be a positive integer");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Power;
    n->lhs = std::move(base);
    n->exponent = exponent;
    return IdealDesc(std::move(n));
}

IdealDesc::Kind IdealDesc::kind() const noexcept { return node_->kind; }

const SeqExpr& IdealDesc::generator() const
{
    if (kind() != Kind::Principal) throw std::logic_error("IdealDesc::generator on a non-principal node");
    return *node_->gen;
}

const IdealDesc& IdealDesc::lhs() const
{
    if (kind() != Kind::Product && kind() != Kind::Sum) throw std::logic_error("IdealDesc::lhs on a leaf");
    return *node_->lhs;
}

const IdealDesc& IdealDesc::rhs() const
{
    if (kind() != Kind::Product && kind() != Kind::Sum) throw std::logic_error("IdealDesc::rhs on a leaf");
    return *node_->rhs;
}

const IdealDesc& IdealDesc::base() const
{
    if (kind() != Kind::Power) throw std::logic_error("IdealDesc::base on a non-power node");
    return *node_->lhs;
}

unsigned IdealDesc::exponent() const
{
    if (kind() != Kind::Power) throw std::logic_error("IdealDesc::exponent on a non-power node");
    return node_->exponent;
}

bool operator==(const IdealDesc& x, const IdealDesc& y)
{
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    using K = IdealDesc::Kind;
    switch (x.kind()) {
    case K::Principal: return x.generator() == y.generator();
    case K::Compact:
    case K::FiniteRank: return true;
    case K::Product:
    case K::Sum: return x.lhs() == y.lhs() && x.rhs() == y.rhs();
    case K::Power: return x.exponent() == y.exponent() && x.base() == y.base();
    }
    return false;
}

std::string IdealDesc::to_string() const
{
    switch (kind()) {
    case Kind::Principal: return "prin(" + generator().to_string() + ")";
    case Kind::Compact: return "KH";
    case Kind::FiniteRank: return "FH";
    case Kind::Product: return "prod(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Kind::Sum: return "sum(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Kind::Power: return "pow(" + base().to_string() + "," + std::to_string(exponent()) + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------
// reduction

namespace {

std::optional<SeqExpr> add(const std::optional<SeqExpr>& a, const std::optional<SeqExpr>& b)
{
    if (!a) return b;
    if (!b) return a;
    return SeqExpr::sum(*a, *b);
}

ReducedIdeal normalize(ReducedIdeal r)
{
    if (r.compact) return ReducedIdeal{true, false, std::nullopt, std::nullopt};
    // a finitely supported generator only generates F(H)
    if (r.principal && eventually_zero(*r.principal)) r.principal.reset(), r.finite_rank = true;
    if (r.soft && eventually_zero(*r.soft)) r.soft.reset(), r.finite_rank = true;
    if (r.principal || r.soft) r.finite_rank = false;
    return r;
}

ReducedIdeal reduced_sum(const ReducedIdeal& a, const ReducedIdeal& b)
{
    ReducedIdeal r;
    r.compact = a.compact || b.compact;
    r.finite_rank = a.finite_rank || b.finite_rank;
    r.principal = add(a.principal, b.principal);
    r.soft = add(a.soft, b.soft);
    return normalize(r);
}

ReducedIdeal reduced_product(const ReducedIdeal& a, const ReducedIdeal& b)
{
    // F(H) times any nonzero ideal is F(H)
    if (a.finite_rank || b.finite_rank) return ReducedIdeal{false, true, std::nullopt, std::nullopt};
    if (a.compact && b.compact) return ReducedIdeal{true, false, std::nullopt, std::nullopt};

    ReducedIdeal r;
    auto soft_term = [&](const SeqExpr& s) { r.soft = add(r.soft, s); };
    if (a.principal && b.principal) r.principal = multiply(*a.principal, *b.principal);
    if (a.principal && b.soft) soft_term(multiply(*a.principal, *b.soft));
    if (a.soft && b.principal) soft_term(multiply(*a.soft, *b.principal));
    if (a.soft && b.soft) soft_term(multiply(*a.soft, *b.soft));
    // (x)K(H) = (x)K(H)K(H)
    if (a.compact) {
        if (b.principal) soft_term(*b.principal);
        if (b.soft) soft_term(*b.soft);
    }
    if (b.compact) {
        if (a.principal) soft_term(*a.principal);
        if (a.soft) soft_term(*a.soft);
    }
    return normalize(r);
}

} // namespace

ReducedIdeal reduce(const IdealDesc& ideal)
{
    using K = IdealDesc::Kind;
    switch (ideal.kind()) {
    case K::Principal: return normalize(ReducedIdeal{false, false, ideal.generator(), std::nullopt});
    case K::Compact: return ReducedIdeal{true, false, std::nullopt, std::nullopt};
    case K::FiniteRank: return ReducedIdeal{false, true, std::nullopt, std::nullopt};
    case K::Product: return reduced_product(reduce(ideal.lhs()), reduce(ideal.rhs()));
    case K::Sum: return reduced_sum(reduce(ideal.lhs()), reduce(ideal.rhs()));
    case K::Power: {
        const auto base = reduce(ideal.base());
        ReducedIdeal acc = base;
        for (unsigned i = 1; i < ideal.exponent(); ++i) acc = reduced_product(acc, base);
        return acc;
    }
    }
    throw std::logic_error("unhandled IdealDesc kind");
}

IdealDesc ReducedIdeal::to_desc() const
{
    if (compact) return IdealDesc::compact();
    if (finite_rank || (!principal && !soft)) return IdealDesc::finite_rank();
    std::optional<IdealDesc> p, s;
    if (principal) p = IdealDesc::principal(*principal);
    if (soft) s = IdealDesc::product(IdealDesc::principal(*soft), IdealDesc::compact());
    if (p && s) return IdealDesc::sum(*p, *s);
    return p ? *p : *s;
}

IdealDesc reduce_product(const IdealDesc& ideal) { return reduce(ideal).to_desc(); }

// ---------------------------------------------------------------------------
// membership

namespace detail {

bool dominated(const SeqExpr& a, const SeqExpr& b)
{
    return compare_classes(asymptotic_class(a), asymptotic_class(b)) <= 0;
}

bool vanishes_against(const SeqExpr& a, const SeqExpr& b)
{
    const auto ca = asymptotic_class(a);
    return ca.zero || compare_classes(ca, asymptotic_class(b)) < 0;
}

} // namespace detail

namespace {

Verdict with_order(Verdict v, Index m)
{
    if (!v.is_yes()) return v;
    Witness w = v.witness();
    w.m = m;
    return Verdict::yes(w, v.symbolic()).with_reason(v.reason());
}

// Scan m = 1..m_max with a sampling comparison.
template <typename Compare>
Verdict numeric_order_scan(const SeqExpr& eta, const SeqExpr& gen, const EngineConfig& cfg, Compare cmp)
{
    bool all_no = true;
    for (Index m = 1; m <= cfg.m_max; ++m) {
        auto v = cmp(eta, ampliate(gen, m), cfg.compare);
        if (v.is_yes()) return with_order(v, m);
        if (!v.is_no()) all_no = false;
    }
    // sampling cannot exclude orders past the grid
    if (all_no)
        return Verdict::unknown("sampled bounds fail for every ampliation order up to " + std::to_string(cfg.m_max) +
                                "; larger orders are not excluded");
    return Verdict::unknown("no ampliation order up to " + std::to_string(cfg.m_max) + " gave a conclusive bound");
}

// eta in (gen): eta = O(D_m gen) for some m.
Verdict member_principal(const SeqExpr& eta, const SeqExpr& gen, const EngineConfig& cfg)
{
    if (cfg.compare.force_numeric) {
        return numeric_order_scan(eta, gen, cfg, [](const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& c) {
            return numeric_compare_O(a, b, c);
        });
    }
    const auto ce = asymptotic_class(eta);
    const auto cg = asymptotic_class(gen);
    bool exists = false;
    if (ce.zero)
        exists = true;
    else if (cg.zero)
        exists = false;
    else if (!cg.rate.is_zero())
        exists = !ce.rate.is_zero(); // D_m slows the generator's decay to rate/m
    else
        exists = compare_classes(ce, cg) <= 0;

    if (!exists) {
        auto v = compare_O(eta, ampliate(gen, cfg.m_max), cfg.compare);
        Certificate c = v.certificate();
        c.detail = "no ampliation order m gives eta = O(D_m gen): " + c.detail;
        return Verdict::no(std::move(c), true);
    }
    const Index m = ce.zero ? 1 : detail::minimal_order([&](Index k) { return detail::dominated(eta, ampliate(gen, k)); });
    return with_order(Verdict::yes(ratio_witness(eta, ampliate(gen, m), cfg.compare), true), m);
}

// eta in (gen)K(H): eta = o(D_m gen) for some m.
Verdict member_soft(const SeqExpr& eta, const SeqExpr& gen, const EngineConfig& cfg)
{
    if (cfg.compare.force_numeric) {
        return numeric_order_scan(eta, gen, cfg, [](const SeqExpr& a, const SeqExpr& b, const ComparisonConfig& c) {
            return numeric_compare_o(a, b, c);
        });
    }
    const auto ce = asymptotic_class(eta);
    const auto cg = asymptotic_class(gen);
    bool exists = false;
    if (ce.zero)
        exists = true;
    else if (cg.zero)
        exists = false;
    else if (!cg.rate.is_zero())
        exists = !ce.rate.is_zero();
    else
        exists = compare_classes(ce, cg) < 0;

    if (!exists) {
        auto v = compare_o(eta, ampliate(gen, cfg.m_max), cfg.compare);
        Certificate c = v.certificate();
        c.detail = "no ampliation order m gives eta = o(D_m gen): " + c.detail;
        return Verdict::no(std::move(c), true);
    }
    const Index m =
        ce.zero ? 1 : detail::minimal_order([&](Index k) { return detail::vanishes_against(eta, ampliate(gen, k)); });
    return with_order(Verdict::yes(ratio_witness(eta, ampliate(gen, m), cfg.compare), true), m);
}

Verdict combine_any(const std::vector<Verdict>& parts)
{
    std::optional<Verdict> first_no;
    std::optional<Verdict> first_unknown;
    for (const auto& v : parts) {
        if (v.is_yes()) return v;
        if (v.is_unknown() && !first_unknown) first_unknown = v;
        if (v.is_no() && !first_no) first_no = v;
    }
    if (first_unknown) return *first_unknown;
    return *first_no;
}

Witness trivial_witness(const EngineConfig& cfg)
{
    Witness w;
    w.window = {1, cfg.compare.window_last};
    return w;
}

} // namespace

Verdict member(const SeqExpr& eta, const IdealDesc& ideal, const EngineConfig& cfg)
{
    const auto r = reduce(ideal);
    if (r.compact) return Verdict::yes(trivial_witness(cfg), true).with_reason("every c0* sequence lies in K(H)");
    if (eventually_zero(eta))
        return Verdict::yes(trivial_witness(cfg), true).with_reason("finite rank lies in every nonzero ideal");
    if (r.finite_rank) {
        Certificate c;
        c.window = {cfg.compare.window_first, cfg.compare.window_last};
        c.detail = "sequence is not finitely supported, so it is not in F(H)";
        return Verdict::no(std::move(c), true);
    }
    std::vector<Verdict> parts;
    if (r.principal) parts.push_back(member_principal(eta, *r.principal, cfg));
    if (r.soft && (parts.empty() || !parts.back().is_yes())) parts.push_back(member_soft(eta, *r.soft, cfg));
    return combine_any(parts);
}

Verdict includes(const IdealDesc& outer, const IdealDesc& inner, const EngineConfig& cfg)
{
    const auto in = reduce(inner);
    const auto out = reduce(outer);
    if (out.compact) return Verdict::yes(trivial_witness(cfg), true).with_reason("every ideal considered lies in K(H)");
    if (in.compact) {
        Certificate c;
        c.window = {cfg.compare.window_first, cfg.compare.window_last};
        c.detail = "K(H) is not contained in any ideal generated by countably many sequences";
        return Verdict::no(std::move(c), true);
    }
    if (in.finite_rank) return Verdict::yes(trivial_witness(cfg), true).with_reason("F(H) lies in every nonzero ideal");

    Witness combined = trivial_witness(cfg);
    auto require = [&](const Verdict& v, const std::string& what) -> std::optional<Verdict> {
        if (v.is_yes()) {
            combined.m = std::max(combined.m, v.witness().m);
            combined.constant = std::max(combined.constant, v.witness().constant);
            return std::nullopt;
        }
        if (v.is_no()) {
            Certificate c = v.certificate();
            c.detail = what + " is not contained: " + c.detail;
            return Verdict::no(std::move(c), v.symbolic());
        }
        return Verdict::unknown(what + ": " + v.reason());
    };
    if (in.principal) {
        if (auto fail = require(member(*in.principal, outer, cfg), "generator " + in.principal->to_string()))
            return *fail;
    }
    if (in.soft) {
        // (q)K(H) lies in outer iff q does, or (q) lies in the soft part's principal
        auto v = member(*in.soft, outer, cfg);
        if (!v.is_yes() && out.soft) {
            auto w = member(*in.soft, IdealDesc::principal(*out.soft), cfg);
            if (w.is_yes() || v.is_no()) v = w;
        }
        if (auto fail = require(v, "soft part (" + in.soft->to_string() + ")K(H)")) return *fail;
    }
    return Verdict::yes(combined, true);
}

Verdict ideal_equal(const IdealDesc& a, const IdealDesc& b, const EngineConfig& cfg)
{
    auto ab = includes(b, a, cfg);
    if (!ab.is_yes()) {
        if (ab.is_no()) {
            Certificate c = ab.certificate();
            c.detail = "left not contained in right; " + c.detail;
            return Verdict::no(std::move(c), ab.symbolic());
        }
        return ab;
    }
    auto ba = includes(a, b, cfg);
    if (!ba.is_yes()) {
        if (ba.is_no()) {
            Certificate c = ba.certificate();
            c.detail = "right not contained in left; " + c.detail;
            return Verdict::no(std::move(c), ba.symbolic());
        }
        return ba;
    }
    Witness w = ab.witness();
    w.m = std::max(w.m, ba.witness().m);
    w.constant = std::max(w.constant, ba.witness().constant);
    return Verdict::yes(w, ab.symbolic() && ba.symbolic());
}

} // namespace subideal
