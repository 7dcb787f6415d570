// Recursive-descent reader for the element grammar:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := unary { ('*'|'/') unary }
//   unary  := '-' unary | power
//   power  := atom [ '^' ['-'] integer ]
//   atom   := integer | name | '(' expr ')'
// Elements of a tower and differential operators share it; for operators the
// name D denotes the derivation and '*' is composition.

#include <cctype>

#include "codo/diffop.hpp"
#include "codo/ring.hpp"

namespace codo {
namespace {

struct ElementAlgebra {
    using Value = RingElement;
    const Tower& tower;
    RingElement constant(const Rational& c) const { return tower.constant(c); }
    RingElement name(const std::string& n) const { return tower.var(n); }
    RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
    // Empty message on success.
    std::string div(RingElement& a, const RingElement& b) const {
        if (b.is_zero()) return "division by zero";
        a = a / b;
        return {};
    }
    std::string power(RingElement& a, int k) const {
        if (k < 0 && a.is_zero()) return "negative power of zero";
        a = pow(a, k);
        return {};
    }
};

struct OperatorAlgebra {
    using Value = DiffOp;
    const TowerPtr& tower;
    DiffOp constant(const Rational& c) const { return DiffOp::scalar(tower->constant(c)); }
    DiffOp name(const std::string& n) const { return n == "D" ? DiffOp::D(1) : DiffOp::scalar(tower->var(n)); }
    DiffOp mul(const DiffOp& a, const DiffOp& b) const { return compose(a, b); }
    std::string div(DiffOp& a, const DiffOp& b) const {
        if (a.order() > 0 || b.order() > 0) return "only functions can be divided";
        if (b.is_zero()) return "division by zero";
        a = DiffOp::scalar(a.coeff(0) / b.coeff(0));
        return {};
    }
    std::string power(DiffOp& a, int k) const {
        if (k < 0) {
            if (a.order() > 0) return "negative power of an operator";
            if (a.is_zero()) return "negative power of zero";
            a = DiffOp::scalar(pow(a.coeff(0), k));
            return {};
        }
        DiffOp r = DiffOp::scalar(RingElement(1));
        for (int i = 0; i < k; ++i) r = compose(r, a);
        a = r;
        return {};
    }
};

template <class Algebra>
class Reader {
public:
    using Value = typename Algebra::Value;
    Reader(Algebra alg, const std::string& text) : alg_(alg), s_(text) {}

    Value run() {
        Value e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value acc;
        bool first = true;
        for (;;) {
            bool neg = false;
            if (first) {
                if (accept('-'))
                    neg = true;
                else
                    accept('+');
            } else if (accept('-')) {
                neg = true;
            } else if (!accept('+')) {
                break;
            }
            Value t = term();
            acc = first ? (neg ? -t : t) : (neg ? acc - t : acc + t);
            first = false;
        }
        return acc;
    }

    Value term() {
        Value acc = unary();
        for (;;) {
            if (accept('*'))
                acc = alg_.mul(acc, unary());
            else if (accept('/')) {
                Value d = unary();
                std::string err = alg_.div(acc, d);
                if (!err.empty()) fail(err);
            } else
                break;
        }
        return acc;
    }

    Value unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Value power() {
        Value base = atom();
        if (!accept('^')) return base;
        bool neg = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        int k = std::stoi(s_.substr(start, pos_ - start));
        std::string err = alg_.power(base, neg ? -k : k);
        if (!err.empty()) fail(err);
        return base;
    }

    Value atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return alg_.constant(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return alg_.name(s_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Algebra alg_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

RingElement Tower::parse(const std::string& text) const {
    return Reader<ElementAlgebra>(ElementAlgebra{*this}, text).run();
}

DiffOp DiffOp::parse(const TowerPtr& tower, const std::string& text) {
    if (tower->find("D")) throw DuplicateName("the name D is reserved for the derivation");
    return Reader<OperatorAlgebra>(OperatorAlgebra{tower}, text).run();
}

}  // namespace codo
