#include "session.hpp"

namespace gmld {

namespace {

struct Token {
    enum Kind { ident, number, punct, end } kind;
    std::string text;
    int line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg, int l, int c) {
        input_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg);
    }

    void advance() {
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
        ++pos;
    }

    Token next() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            break;
        }
        if (pos >= src.size()) return {Token::end, "", line, col};
        Token t;
        t.line = line;
        t.col = col;
        char c = src[pos];
        if (isalpha((unsigned char)c) || c == '_') {
            t.kind = Token::ident;
            while (pos < src.size() && (isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
                t.text += src[pos];
                advance();
            }
            return t;
        }
        if (isdigit((unsigned char)c)) {
            t.kind = Token::number;
            while (pos < src.size() && isdigit((unsigned char)src[pos])) {
                t.text += src[pos];
                advance();
            }
            return t;
        }
        static const std::string puncts = ";=()[],+-*/^";
        if (puncts.find(c) != std::string::npos) {
            t.kind = Token::punct;
            t.text = std::string(1, c);
            advance();
            return t;
        }
        fail(std::string("unexpected character '") + c + "'", line, col);
    }
};

bool is_keyword(const std::string& s) {
    static const char* kw[] = {"ring", "sym", "ideal", "matrix", "det", "adj", "trace", "K", "S"};
    for (auto* k : kw)
        if (s == k) return true;
    return false;
}

// Expression values: rational functions tagged by which ring their variables
// came from (0 = constants only).
struct Val {
    RatFn fn;
    int tag = 0;
};

struct Parser {
    Lexer lex;
    Token tok;
    Session ses;

    explicit Parser(const std::string& text) : lex(text) {
        ses.source = text;
        tok = lex.next();
    }

    [[noreturn]] void fail(const std::string& msg) { lex.fail(msg, tok.line, tok.col); }

    void bump() { tok = lex.next(); }

    bool at_punct(const std::string& p) { return tok.kind == Token::punct && tok.text == p; }
    void expect_punct(const std::string& p) {
        if (!at_punct(p)) fail("expected '" + p + "'");
        bump();
    }
    bool at_ident(const std::string& s) { return tok.kind == Token::ident && tok.text == s; }

    void require_ring() {
        if (!ses.ring) fail("a ring must be declared first");
    }

    int combine(int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) fail("expression mixes primal and dual variables");
        return a;
    }

    const RingP& ring_for(int tag) { return tag == 2 ? ses.dual : ses.ring; }

    Val retag(Val v, int tag) {
        if (v.tag == tag || tag == 0) return v;
        if (v.tag == 0) {
            // re-express constants over the requested ring
            Rat c = v.fn.num.is_zero() ? Rat(0) : v.fn.num.lc() / v.fn.den.lc();
            Val out;
            out.tag = tag;
            out.fn = RatFn{QPoly::konst(ring_for(tag), c), QPoly::constant(ring_for(tag), 1)};
            return out;
        }
        fail("expression mixes primal and dual variables");
    }

    Val binop(char op, Val a, Val b) {
        int tag = combine(a.tag, b.tag);
        a = retag(a, tag);
        b = retag(b, tag);
        Val out;
        out.tag = tag;
        switch (op) {
            case '+': out.fn = a.fn + b.fn; break;
            case '-': out.fn = a.fn - b.fn; break;
            case '*': out.fn = a.fn * b.fn; break;
            case '/': out.fn = a.fn / b.fn; break;
        }
        return out;
    }

    const std::vector<std::vector<Rat>>& matrix_ref() {
        if (tok.kind != Token::ident) fail("expected a matrix name");
        std::string name = tok.text;
        if (name == "adj") {
            bump();
            expect_punct("(");
            if (tok.kind != Token::ident || !ses.matrices.count(tok.text))
                fail("adj() needs a bound matrix name");
            static thread_local std::vector<std::vector<Rat>> tmp;
            tmp = rat_mat_adjugate(ses.matrices.at(tok.text));
            bump();
            expect_punct(")");
            return tmp;
        }
        if (!ses.matrices.count(name)) fail("unbound matrix '" + name + "'");
        bump();
        return ses.matrices.at(name);
    }

    Val atom() {
        require_ring();
        if (tok.kind == Token::number) {
            Val v;
            v.fn = RatFn{QPoly::constant(ses.ring, std::stol(tok.text)), QPoly::constant(ses.ring, 1)};
            v.tag = 0;
            bump();
            return v;
        }
        if (at_punct("(")) {
            bump();
            Val v = expr();
            expect_punct(")");
            return v;
        }
        if (tok.kind != Token::ident) fail("expected a value");
        std::string name = tok.text;
        if (name == "det") {
            if (ses.sym_m == 0) fail("det is only bound for symmetric rings");
            bump();
            return Val{ratfn_of(sym_det(ses.ring)), 1};
        }
        if (name == "trace") {
            bump();
            expect_punct("(");
            auto& m = matrix_ref();
            expect_punct("*");
            if (!at_ident("K") && !at_ident("S")) fail("trace pairs a matrix with K or S");
            bool primal = at_ident("K");
            bump();
            expect_punct(")");
            if (ses.sym_m == 0) fail("trace pairing is only bound for symmetric rings");
            Val v;
            v.tag = primal ? 1 : 2;
            v.fn = ratfn_of(trace_pair(primal ? ses.ring : ses.dual, m));
            return v;
        }
        if (is_keyword(name)) fail("'" + name + "' cannot be used as a value here");
        int pi = ses.ring->index_of(name);
        if (pi >= 0) {
            bump();
            return Val{ratfn_of(QPoly::var(ses.ring, pi)), 1};
        }
        int di = ses.dual->index_of(name);
        if (di >= 0) {
            bump();
            return Val{ratfn_of(QPoly::var(ses.dual, di)), 2};
        }
        if (ses.fns.count(name)) {
            bump();
            return Val{ses.fns.at(name).value, ses.fns.at(name).ring_tag};
        }
        fail("unbound name '" + name + "'");
    }

    Val factor() {
        if (at_punct("-")) {
            bump();
            Val v = factor();
            v.fn = -v.fn;
            return v;
        }
        Val v = atom();
        while (at_punct("^")) {
            bump();
            if (tok.kind != Token::number) fail("exponent must be a nonnegative integer");
            long e = std::stol(tok.text);
            bump();
            v.fn = ratfn_pow(v.fn, e);
        }
        return v;
    }

    Val term() {
        Val v = factor();
        while (at_punct("*") || at_punct("/")) {
            char op = tok.text[0];
            bump();
            v = binop(op, v, factor());
        }
        return v;
    }

    Val expr() {
        Val v = term();
        while (at_punct("+") || at_punct("-")) {
            char op = tok.text[0];
            bump();
            v = binop(op, v, term());
        }
        return v;
    }

    QPoly expr_poly() {
        Val v = expr();
        if (!v.fn.den.is_constant()) fail("a polynomial is required here, found a denominator");
        if (v.tag == 2) fail("ideal generators must use the primal variables");
        Rat d = v.fn.den.lc();
        QPoly p = v.fn.num.scaled(d.inv());
        if (v.tag == 0) p = embed(p, ses.ring, 0);  // constants live in the primal ring
        return p;
    }

    Rat expr_const() {
        Val v = expr();
        if (v.tag != 0 || !v.fn.num.is_constant() || !v.fn.den.is_constant())
            fail("a rational constant is required here");
        if (v.fn.num.is_zero()) return Rat(0);
        return v.fn.num.lc() / v.fn.den.lc();
    }

    void ring_decl() {
        if (ses.ring) fail("ring already declared");
        bump();  // 'ring'
        if (at_ident("sym")) {
            bump();
            if (tok.kind != Token::number) fail("expected a matrix size");
            int m = std::stoi(tok.text);
            bump();
            SymSpace sp = make_symspace(m);
            ses.ring = sp.primal;
            ses.dual = sp.dual;
            ses.sym_m = m;
        } else {
            std::vector<std::string> names;
            while (tok.kind == Token::ident) {
                if (is_keyword(tok.text)) fail("'" + tok.text + "' is reserved");
                names.push_back(tok.text);
                bump();
            }
            if (names.empty()) fail("ring declaration needs variable names");
            std::vector<std::string> dn;
            for (auto& n : names) dn.push_back("u_" + n);
            for (auto& n : names)
                for (auto& d : dn)
                    if (n == d) fail("variable '" + n + "' collides with a dual variable name");
            ses.ring = make_ring(names);
            ses.dual = make_ring(dn);
        }
        expect_punct(";");
    }

    void statement() {
        if (at_ident("ring")) {
            ring_decl();
            return;
        }
        if (tok.kind != Token::ident) fail("expected a statement");
        std::string name = tok.text;
        if (is_keyword(name)) fail("'" + name + "' is reserved");
        bump();
        expect_punct("=");
        require_ring();
        if (ses.fns.count(name) || ses.ideals.count(name) || ses.matrices.count(name) ||
            ses.vectors.count(name))
            fail("name '" + name + "' is already bound");
        if (at_ident("ideal")) {
            bump();
            expect_punct("(");
            std::vector<QPoly> gens;
            gens.push_back(expr_poly());
            while (at_punct(",")) {
                bump();
                gens.push_back(expr_poly());
            }
            expect_punct(")");
            ses.ideals[name] = gens;
        } else if (at_ident("matrix")) {
            bump();
            expect_punct("[");
            std::vector<std::vector<Rat>> rows;
            while (true) {
                expect_punct("[");
                std::vector<Rat> row;
                row.push_back(expr_const());
                while (at_punct(",")) {
                    bump();
                    row.push_back(expr_const());
                }
                expect_punct("]");
                rows.push_back(row);
                if (at_punct(",")) {
                    bump();
                    continue;
                }
                break;
            }
            expect_punct("]");
            for (auto& r : rows)
                if (r.size() != rows[0].size()) fail("matrix rows have unequal lengths");
            ses.matrices[name] = rows;
        } else if (at_punct("[")) {
            bump();
            std::vector<Rat> v;
            v.push_back(expr_const());
            while (at_punct(",")) {
                bump();
                v.push_back(expr_const());
            }
            expect_punct("]");
            ses.vectors[name] = v;
        } else {
            Val v = expr();
            ses.fns[name] = Session::Fn{v.fn, v.tag};
        }
        expect_punct(";");
    }

    Session run() {
        while (tok.kind != Token::end) statement();
        require_ring();
        return std::move(ses);
    }
};

}  // namespace

Session parse_session(const std::string& text) {
    Parser p(text);
    return p.run();
}

const Session::Fn& Session::fn(const std::string& name) const {
    auto it = fns.find(name);
    if (it == fns.end()) input_error("session does not bind '" + name + "'");
    return it->second;
}

const std::vector<QPoly>& Session::ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) input_error("session does not bind ideal '" + name + "'");
    return it->second;
}

const std::vector<std::vector<Rat>>& Session::matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) input_error("session does not bind matrix '" + name + "'");
    return it->second;
}

const std::vector<Rat>& Session::vec(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) input_error("session does not bind point '" + name + "'");
    return it->second;
}

RatFn Session::require_F() const {
    const Fn& f = fn("F");
    if (f.ring_tag == 2) input_error("F must be a function of the primal variables");
    RatFn v = f.value;
    if (f.ring_tag == 0) v = RatFn{embed(v.num, ring, 0), embed(v.den, ring, 0)};
    if (!v.is_homogeneous()) {
        std::string terms;
        for (auto& [m, c] : v.num.t) {
            if (!terms.empty()) terms += ", ";
            terms += poly_str(QPoly::term(v.num.ring, m, c));
        }
        input_error("F must be homogeneous; numerator terms: " + terms);
    }
    return v;
}

VarietySpec Session::require_X() const {
    return make_variety(ring, ideal("X"));
}

QPoly Session::require_alpha() const {
    const Fn& f = fn("alpha");
    if (f.ring_tag == 2) input_error("alpha must be a linear form in the primal variables");
    if (!f.value.den.is_constant()) input_error("alpha must be a polynomial");
    QPoly a = f.value.num.scaled(f.value.den.lc().inv());
    if (f.ring_tag == 0) a = embed(a, ring, 0);
    if (a.deg() != 1 || !a.is_homogeneous()) input_error("alpha must be a linear form");
    return a;
}

RatFn Session::require_phi() const {
    const Fn& f = fn("Phi");
    if (f.ring_tag == 1) input_error("Phi must be a function of the dual variables");
    RatFn v = f.value;
    if (f.ring_tag == 0) v = RatFn{embed(v.num, dual, 0), embed(v.den, dual, 0)};
    if (!v.is_homogeneous()) input_error("Phi must be homogeneous");
    return v;
}

std::vector<Rat> Session::require_point() const {
    auto p = vec("point");
    if ((int)p.size() != dual->nvars()) input_error("point arity does not match the dual ring");
    return p;
}

}  // namespace gmld
