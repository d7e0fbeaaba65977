#include "segrekit/literal.hpp"

#include "segrekit/errors.hpp"

#include <cctype>
#include <map>

namespace segrekit {

namespace {

class ExprReader {
public:
    ExprReader(std::string s, const std::string& var) : s_(std::move(s)), var_(var) {}

    std::map<int, GaussRational> run()
    {
        std::map<int, GaussRational> out;
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [deg, c] = term();
            out[deg] += sign < 0 ? -c : c;
            first = false;
        }
        if (first)
            fail("empty literal");
        return out;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("bad series literal '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    bool at_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }

    std::string digits()
    {
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    GaussRational coefficient()
    {
        if (peek() == '(') {
            size_t close = s_.find(')', pos_);
            if (close == std::string::npos)
                fail("unbalanced parenthesis");
            std::string inner = s_.substr(pos_ + 1, close - pos_ - 1);
            pos_ = close + 1;
            return GaussRational::parse(inner);
        }
        if (peek() == 'i' && !at_var()) {
            ++pos_;
            return GaussRational::i();
        }
        std::string num = digits();
        if (num.empty())
            fail("expected coefficient");
        std::string text = num;
        if (peek() == '/') {
            ++pos_;
            std::string den = digits();
            if (den.empty())
                fail("expected denominator");
            text += "/" + den;
        }
        if (peek() == 'i' && !at_var()) {
            ++pos_;
            text += "i";
        }
        return GaussRational::parse(text);
    }

    int power()
    {
        if (!at_var())
            fail("expected variable '" + var_ + "'");
        pos_ += var_.size();
        if (peek() != '^')
            return 1;
        ++pos_;
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        std::string d = digits();
        if (d.empty() || d.size() > 6)
            fail("bad exponent");
        return sign * std::stoi(d);
    }

    std::pair<int, GaussRational> term()
    {
        if (at_var())
            return {power(), GaussRational(1)};
        GaussRational c = coefficient();
        if (peek() == '*') {
            ++pos_;
            return {power(), c};
        }
        if (at_var())
            return {power(), c};
        return {0, c};
    }

    std::string s_;
    const std::string& var_;
    size_t pos_ = 0;
};

std::string strip(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    return s;
}

}  // namespace

ULaurent parse_laurent(const std::string& text, const std::string& var, int trunc)
{
    std::string s = strip(text);
    if (s.empty())
        throw ParseError("empty series literal");
    if (var.empty() || var[0] == 'i')
        throw ParseError("variable name must not start with 'i'");
    std::map<int, GaussRational> coeffs;
    if (s.find(',') != std::string::npos) {
        size_t start = 0;
        int deg = 0;
        while (true) {
            size_t comma = s.find(',', start);
            std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
            if (item.empty())
                throw ParseError("empty entry in coefficient list '" + s + "'");
            coeffs[deg++] = GaussRational::parse(item);
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    } else {
        coeffs = ExprReader(s, var).run();
    }
    int low = 0;
    for (const auto& [d, c] : coeffs)
        if (!c.is_zero())
            low = std::min(low, d);
    int pole = -low;
    USeries body(add_trunc(trunc, pole), var);
    for (const auto& [d, c] : coeffs)
        body.set(d + pole, c);
    return ULaurent(body, pole);
}

USeries parse_series(const std::string& text, const std::string& var, int trunc)
{
    ULaurent l = parse_laurent(text, var, trunc);
    if (l.pole() > 0)
        throw ParseError("negative powers are not allowed in a power series literal '" + text + "'");
    return l.body();
}

}  // namespace segrekit
