#include "subideal/verdict.hpp"

#include <stdexcept>

namespace subideal {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Yes: return "Yes";
    case Outcome::No: return "No";
    case Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

Verdict Verdict::yes(Witness w, bool symbolic)
{
    Verdict v;
    v.outcome_ = Outcome::Yes;
    v.symbolic_ = symbolic;
    v.witness_ = w;
    return v;
}

Verdict Verdict::no(Certificate c, bool symbolic)
{
    Verdict v;
    v.outcome_ = Outcome::No;
    v.symbolic_ = symbolic;
    v.certificate_ = std::move(c);
    return v;
}

Verdict Verdict::unknown(std::string reason)
{
    if (reason.empty()) throw std::logic_error("Unknown verdicts need a reason");
    Verdict v;
    v.outcome_ = Outcome::Unknown;
    v.reason_ = std::move(reason);
    return v;
}

const Witness& Verdict::witness() const
{
    if (!witness_) throw std::logic_error("verdict has no witness (outcome " + to_string(outcome_) + ")");
    return *witness_;
}

const Certificate& Verdict::certificate() const
{
    if (!certificate_) throw std::logic_error("verdict has no certificate (outcome " + to_string(outcome_) + ")");
    return *certificate_;
}

Verdict Verdict::with_reason(std::string reason) const
{
    Verdict v = *this;
    v.reason_ = std::move(reason);
    return v;
}

} // namespace subideal
