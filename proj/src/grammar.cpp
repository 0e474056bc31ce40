#include "subideal/grammar.hpp"

#include <cctype>

namespace subideal {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    SeqExpr whole_seq()
    {
        auto e = seq();
        finish();
        return e;
    }

    IdealDesc whole_ideal()
    {
        auto i = ideal();
        finish();
        return i;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(at, msg); }

    void finish()
    {
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input '" + std::string(s_.substr(pos_)) + "'", pos_);
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'" + (pos_ < s_.size() ? std::string(" before '") + s_[pos_] + "'" : ""),
                 pos_);
        ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string word()
    {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(pos_ < s_.size() ? "expected a name" : "unexpected end of input", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational rational()
    {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' || c == '-' || c == '+' ||
                c == 'e' || c == 'E')
                ++pos_;
            else
                break;
        }
        if (start == pos_) fail("expected a number", start);
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what(), start);
        }
    }

    Index order()
    {
        skip();
        const auto start = pos_;
        const Rational r = rational();
        if (r.get_den() != 1 || sgn(r) <= 0 || !r.get_num().fits_ulong_p())
            fail("expected a positive integer, got " + render_rational(r), start);
        return r.get_num().get_ui();
    }

    template <typename F>
    auto build(std::size_t at, F&& f)
    {
        try {
            return f();
        } catch (const DomainError& e) {
            throw DomainError("at " + std::to_string(at) + ": " + e.what());
        }
    }

    SeqExpr seq()
    {
        skip();
        const auto at = pos_;
        const auto name = word();
        expect('(');
        if (name == "pow") {
            Rational p = rational();
            Rational q = 0;
            if (accept(',')) q = rational();
            expect(')');
            return build(at, [&] { return SeqExpr::power_log(p, q); });
        }
        if (name == "geo") {
            Rational r = rational();
            expect(')');
            return build(at, [&] { return SeqExpr::geometric(r); });
        }
        if (name == "fin") {
            std::vector<Rational> v{rational()};
            while (accept(',')) v.push_back(rational());
            expect(')');
            return build(at, [&] { return SeqExpr::finite(v); });
        }
        if (name == "scale") {
            Rational c = rational();
            expect(',');
            auto e = seq();
            expect(')');
            return build(at, [&] { return SeqExpr::scale(c, e); });
        }
        if (name == "amp" || name == "dec") {
            const Index k = order();
            expect(',');
            auto e = seq();
            expect(')');
            return name == "amp" ? SeqExpr::ampliate_node(k, e) : SeqExpr::decimate_node(k, e);
        }
        if (name == "sum" || name == "max" || name == "prod") {
            auto a = seq();
            expect(',');
            auto b = seq();
            expect(')');
            if (name == "sum") return SeqExpr::sum(a, b);
            if (name == "max") return SeqExpr::max(a, b);
            return SeqExpr::product(a, b);
        }
        fail("unknown sequence constructor '" + name + "'", at);
    }

    IdealDesc ideal()
    {
        skip();
        const auto at = pos_;
        const auto name = word();
        if (name == "KH") return IdealDesc::compact();
        if (name == "FH") return IdealDesc::finite_rank();
        expect('(');
        if (name == "prin") {
            auto e = seq();
            expect(')');
            return build(at, [&] { return IdealDesc::principal(e); });
        }
        if (name == "prod" || name == "sum") {
            auto a = ideal();
            expect(',');
            auto b = ideal();
            expect(')');
            return name == "prod" ? IdealDesc::product(a, b) : IdealDesc::sum(a, b);
        }
        if (name == "pow") {
            auto base = ideal();
            expect(',');
            const auto n_at = pos_;
            const Index n = order();
            expect(')');
            if (n > 64) fail("ideal power exponent too large", n_at);
            return IdealDesc::power(base, static_cast<unsigned>(n));
        }
        fail("unknown ideal constructor '" + name + "'", at);
    }
};

} // namespace

SeqExpr parse_seq(std::string_view text)
{
    return Parser(text).whole_seq();
}

IdealDesc parse_ideal(std::string_view text)
{
    return Parser(text).whole_ideal();
}

} // namespace subideal
