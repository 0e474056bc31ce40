#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subideal {

enum class Outcome { Yes, No, Unknown };

std::string to_string(Outcome o);

struct IndexRange {
    std::uint64_t first = 1;
    std::uint64_t last = 1;
};

/// One sampled point of a ratio a_n / b_n, stored as a natural log so that
/// geometric tails neither underflow nor overflow.
struct RatioSample {
    std::uint64_t index = 0;
    long double log_ratio = 0.0L;
};

struct Witness {
    std::uint64_t k = 1; ///< decimation / ampliation order of the left side
    std::uint64_t m = 1; ///< ampliation order of the generator
    double constant = 1.0; ///< C in a_n <= C b_n over `window`
    IndexRange window;
};

struct Certificate {
    IndexRange window;
    std::vector<RatioSample> evidence;
    std::string detail;
};

/// Three-valued decision. Yes carries a witness, No a certificate and
/// Unknown a reason; the named constructors are the only way to build one.
class Verdict {
public:
    static Verdict yes(Witness w, bool symbolic);
    static Verdict no(Certificate c, bool symbolic);
    static Verdict unknown(std::string reason);

    Outcome outcome() const noexcept { return outcome_; }
    bool is_yes() const noexcept { return outcome_ == Outcome::Yes; }
    bool is_no() const noexcept { return outcome_ == Outcome::No; }
    bool is_unknown() const noexcept { return outcome_ == Outcome::Unknown; }
    /// Decided by normal-form algebra rather than sampling.
    bool symbolic() const noexcept { return symbolic_; }

    const Witness& witness() const;
    const Certificate& certificate() const;
    const std::string& reason() const noexcept { return reason_; }

    Verdict with_reason(std::string reason) const;

private:
    Verdict() = default;

    Outcome outcome_ = Outcome::Unknown;
    bool symbolic_ = false;
    std::optional<Witness> witness_;
    std::optional<Certificate> certificate_;
    std::string reason_;
};

} // namespace subideal
