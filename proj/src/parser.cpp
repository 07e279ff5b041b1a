#include "hyperalg/parser.hpp"

#include <cctype>

#include "hyperalg/idempotents.hpp"

namespace halg {

namespace {

class Parser {
public:
    Parser(const std::string& text, uint32_t p) : s_(text), p_(p) {}

    Element run() {
        Element e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    Element expr() {
        Element e = term();
        while (peek() == '+') {
            ++pos_;
            e = e + term();
        }
        return e;
    }

    Element term() {
        Element e = factor();
        while (peek() == '*') {
            ++pos_;
            e = e * factor();
        }
        return e;
    }

    Element factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Element::unit(p_).scaled(integer());
        if (c == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        return atom();
    }

    Element atom() {
        size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            name += s_[pos_++];
        if (name.empty()) fail("expected atom");
        expect('(');
        Element e = Element::zero(p_);
        if (name == "X" || name == "Y" || name == "H") {
            uint32_t idx = uint32_t(integer());
            if (name == "X") e = Element::x_dp(idx, p_);
            else if (name == "Y") e = Element::y_dp(idx, p_);
            else e = Element::h_binom(idx, p_);
        } else if (name == "mu") {
            int64_t a = integer();
            uint32_t r = 1;
            if (peek() == ',') {
                ++pos_;
                r = uint32_t(integer());
            }
            e = mu(a, r, p_);
        } else if (name == "B") {
            EpsVec eps = bits();
            expect(';');
            Tuple t = pairs();
            if (eps.size() != t.size()) fail("eps/pair length mismatch", start);
            e = b_element(eps, t, p_);
        } else if (name == "E") {
            e = e_idempotent(pairs(), p_);
        } else {
            fail("unknown atom '" + name + "'", start);
        }
        expect(')');
        return e;
    }

    EpsVec bits() {
        skip_ws();
        EpsVec out;
        while (peek() == '0' || peek() == '1') out.push_back(uint8_t(s_[pos_++] - '0'));
        if (out.empty()) fail("expected bit string");
        return out;
    }

    Tuple pairs() {
        Tuple out;
        while (true) {
            int64_t a = integer();
            expect(':');
            int64_t tj = integer();
            try {
                out.push_back(make_pair(uint32_t(a), uint32_t(tj), p_));
            } catch (const std::invalid_argument&) {
                fail("pair " + std::to_string(a) + ":" + std::to_string(tj) +
                     " not in P");
            }
            if (peek() != ',') break;
            ++pos_;
        }
        return out;
    }

    int64_t integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer", start);
        int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, size_t at) { throw ParseError(msg, at); }

    const std::string& s_;
    uint32_t p_;
    size_t pos_ = 0;
};

}  // namespace

Element parse_element(const std::string& text, uint32_t p) {
    return Parser(text, p).run();
}

}  // namespace halg
