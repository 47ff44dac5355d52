#include "mfk/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfk {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

int lookup(const std::vector<std::string>& names, const std::string& name) {
    for (size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return static_cast<int>(k) + 1;
    return 0;
}

// Recursive-descent parser over a single line slice.  parse_partial leaves the
// cursor on the first token the grammar cannot consume, so callers can handle
// their own separators (',', '|', ']', '->').
class ExprParser {
public:
    ExprParser(std::string_view s, const ExprEnv& env, int line, int col_base)
        : s_(s), env_(env), line_(line), col_base_(col_base) {}

    RatExpr parse_full() {
        RatExpr e = parse_partial();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }
    RatExpr parse_partial() {
        skip();
        if (pos_ == s_.size()) fail("expected an expression");
        return expr();
    }

    bool try_eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool at_end() {
        skip();
        return pos_ == s_.size();
    }
    size_t pos() const { return pos_; }

    // a bare coordinate: an independent name, or a dependent name with indices
    Indet parse_coord() {
        skip();
        size_t at = pos_;
        if (pos_ == s_.size() || !is_ident_start(s_[pos_])) fail("expected a coordinate name");
        std::string name = ident();
        return coord_from(name, at);
    }

    [[noreturn]] void fail(const std::string& msg) const { raise<ParseError>(msg, pos_); }

private:
    std::string_view s_;
    const ExprEnv& env_;
    int line_, col_base_;
    size_t pos_ = 0;

    template <class E>
    [[noreturn]] void raise(const std::string& msg, size_t at) const {
        throw E("line " + std::to_string(line_) + ", col " +
                std::to_string(col_base_ + static_cast<int>(at)) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::string ident() {
        size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    long integer(const char* what) {
        skip();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(std::string("expected ") + what);
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    RatExpr expr() {
        RatExpr e = term();
        for (;;) {
            if (try_eat('+'))
                e += term();
            else if (try_eat('-'))
                e -= term();
            else
                return e;
        }
    }
    RatExpr term() {
        RatExpr e = factor();
        for (;;) {
            if (try_eat('*'))
                e *= factor();
            else if (try_eat('/'))
                e = e / factor();
            else
                return e;
        }
    }
    RatExpr factor() {
        if (try_eat('-')) return -factor();
        if (try_eat('+')) return factor();
        RatExpr b = atom();
        if (try_eat('^')) return b.pow(static_cast<int>(integer("a non-negative exponent")));
        return b;
    }
    RatExpr atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatExpr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rat r(std::string(s_.substr(start, pos_ - start)));
            r.canonicalize();
            return RatExpr::constant(r);
        }
        if (is_ident_start(c)) return symbol();
        if (c == '\0') fail("unexpected end of expression");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    MultiIndex indices() {
        std::vector<int> a;
        a.push_back(static_cast<int>(integer("an index")));
        while (try_eat(',')) a.push_back(static_cast<int>(integer("an index")));
        if (a.size() != env_.independents.size())
            fail("expected " + std::to_string(env_.independents.size()) + " indices, got " +
                 std::to_string(a.size()));
        return MultiIndex(std::move(a));
    }

    Indet coord_from(const std::string& name, size_t at) {
        if (int i = lookup(env_.independents, name)) return Indet::independent(i);
        if (int j = lookup(env_.dependents, name)) {
            expect('[');
            MultiIndex a = indices();
            expect(']');
            return Indet::jet(j, a);
        }
        raise<UnknownName>("unknown name '" + name + "'", at);
    }

    RatExpr symbol() {
        size_t at = pos_;
        std::string name = ident();
        if ((name == "I" || name == "M") && peek() == '(') {
            if (!env_.allow_inv_symbols)
                raise<ParseError>("invariant symbols are not allowed in this context", at);
            expect('(');
            Indet base = parse_coord();
            if (name == "I") {
                expect(')');
                return RatExpr::var(Indet::inv(base));
            }
            expect(';');
            MultiIndex beta = indices();
            expect(')');
            return RatExpr::var(Indet::mono(base, beta));
        }
        if (auto it = env_.params.find(name); it != env_.params.end()) return it->second;
        if (int i = lookup(env_.independents, name)) return RatExpr::var(Indet::independent(i));
        if (int j = lookup(env_.dependents, name)) {
            expect('[');
            MultiIndex a = indices();
            expect(']');
            return RatExpr::var(Indet::jet(j, a));
        }
        raise<UnknownName>("unknown name '" + name + "'", at);
    }
};

struct Line {
    int no = 0;
    std::string text;    // comment-stripped
    size_t indent = 0;   // leading whitespace width
    bool blank = true;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line l;
        l.no = no;
        l.text = raw;
        while (l.indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[l.indent])))
            ++l.indent;
        l.blank = l.indent == raw.size();
        out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

std::string take_word(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
}

} // namespace

RatExpr parse_expression(const std::string& text, const ExprEnv& env, int line, int col_base) {
    return ExprParser(text, env, line, col_base).parse_full();
}

ActionSpecFile parse_action_spec(const std::string& text) {
    ActionSpecFile out;
    ExprEnv env;
    env.allow_inv_symbols = false;

    auto declare = [&](const std::string& name, const Line& l, size_t col) {
        if (name.empty() || !is_ident_start(name[0]))
            fail_at(l.no, static_cast<int>(col) + 1, "'" + name + "' is not a valid name");
        if (lookup(env.independents, name) || lookup(env.dependents, name) ||
            env.params.count(name))
            fail_at(l.no, static_cast<int>(col) + 1, "duplicate name '" + name + "'");
    };

    bool in_section = false;
    int section_line = 0;
    for (const Line& l : split_lines(text)) {
        if (l.blank) continue;
        if (l.indent > 0) {
            if (!in_section) fail_at(l.no, 1, "unexpected indentation");
            // cross-section rule: LHS [^k] -> RHS
            auto arrow = l.text.find("->");
            if (arrow == std::string::npos) fail_at(l.no, 1, "expected 'LHS -> RHS'");
            ExprParser lhs(std::string_view(l.text).substr(0, arrow), env, l.no, 1);
            CrossSectionRule rule;
            rule.coord = lhs.parse_coord();
            if (lhs.try_eat('^')) {
                ExprParser exp(std::string_view(l.text).substr(lhs.pos(), arrow - lhs.pos()), env,
                               l.no, static_cast<int>(lhs.pos()) + 1);
                RatExpr k = exp.parse_full();
                if (!k.is_constant() || k.constant_value() <= 0 ||
                    k.constant_value().get_den() != 1)
                    fail_at(l.no, static_cast<int>(lhs.pos()) + 1,
                            "rule power must be a positive integer");
                rule.power = static_cast<int>(k.constant_value().get_num().get_si());
            } else if (!lhs.at_end()) {
                lhs.fail("expected '^' or '->'");
            }
            rule.rhs = ExprParser(std::string_view(l.text).substr(arrow + 2), env, l.no,
                                  static_cast<int>(arrow) + 3)
                           .parse_full();
            out.section.rules.push_back(std::move(rule));
            continue;
        }

        in_section = false;
        size_t pos = 0;
        std::string head = take_word(l.text, pos);
        if (head == "independent" || head == "dependent") {
            auto& names = head == "independent" ? env.independents : env.dependents;
            for (;;) {
                size_t at = pos;
                std::string name = take_word(l.text, pos);
                if (name.empty()) break;
                declare(name, l, at);
                names.push_back(name);
            }
            if (names.empty()) fail_at(l.no, static_cast<int>(pos) + 1, "expected variable names");
        } else if (head == "param") {
            size_t at = pos;
            std::string name = take_word(l.text, pos);
            declare(name, l, at);
            std::string eq = take_word(l.text, pos);
            if (eq != "=") fail_at(l.no, static_cast<int>(pos) + 1, "expected '='");
            RatExpr value = ExprParser(std::string_view(l.text).substr(pos), env, l.no,
                                       static_cast<int>(pos) + 1)
                                .parse_full();
            if (!value.is_constant())
                fail_at(l.no, static_cast<int>(pos) + 1, "param value must be a rational constant");
            out.params.emplace_back(name, value.constant_value());
            env.params.emplace(name, value);
        } else if (head == "generator") {
            if (env.independents.empty() || env.dependents.empty())
                fail_at(l.no, 1, "declare independent and dependent variables first");
            size_t at = pos;
            std::string name = take_word(l.text, pos);
            if (name.empty() || !is_ident_start(name[0]))
                fail_at(l.no, static_cast<int>(at) + 1, "expected a generator name");
            std::string eq = take_word(l.text, pos);
            if (eq != "=") fail_at(l.no, static_cast<int>(pos) + 1, "expected '='");
            ExprParser p(std::string_view(l.text).substr(pos), env, l.no,
                         static_cast<int>(pos) + 1);
            p.expect('[');
            Generator g;
            g.name = name;
            g.xi.push_back(p.parse_partial());
            while (p.try_eat(',')) g.xi.push_back(p.parse_partial());
            p.expect('|');
            g.eta.push_back(p.parse_partial());
            while (p.try_eat(',')) g.eta.push_back(p.parse_partial());
            p.expect(']');
            if (!p.at_end()) p.fail("unexpected trailing input");
            if (g.xi.size() != env.independents.size() || g.eta.size() != env.dependents.size())
                throw ArityMismatch("line " + std::to_string(l.no) + ": generator '" + name +
                                    "' needs " + std::to_string(env.independents.size()) +
                                    " xi and " + std::to_string(env.dependents.size()) +
                                    " eta components");
            for (const auto& coeffs : {g.xi, g.eta})
                for (const RatExpr& c : coeffs)
                    for (const Indet& v : c.vars())
                        if (v.is_jet() && v.alpha().order() > 0)
                            fail_at(l.no, 1, "generator coefficients must have order 0");
            out.generators.push_back(std::move(g));
        } else if (head == "cross_section") {
            std::string kw = take_word(l.text, pos);
            if (kw != "order") fail_at(l.no, static_cast<int>(pos) + 1, "expected 'order K'");
            std::string k = take_word(l.text, pos);
            try {
                out.declared_order = std::stoi(k);
            } catch (const std::exception&) {
                fail_at(l.no, static_cast<int>(pos) + 1, "expected 'order K'");
            }
            if (in_section || !out.section.rules.empty())
                fail_at(l.no, 1, "only one cross_section block is allowed");
            in_section = true;
            section_line = l.no;
        } else {
            fail_at(l.no, 1, "unknown directive '" + head + "'");
        }
    }

    out.independents = env.independents;
    out.dependents = env.dependents;
    if (out.independents.empty()) throw ParseError("no independent variables declared");
    if (out.dependents.empty()) throw ParseError("no dependent variables declared");
    if (out.generators.empty()) throw ParseError("no generators declared");
    if (out.section.rules.empty()) throw ParseError("no cross-section rules declared");
    if (out.generators.size() != out.section.rules.size())
        throw ArityMismatch(std::to_string(out.generators.size()) + " generators but " +
                            std::to_string(out.section.rules.size()) + " cross-section rules");
    if (out.declared_order != out.section.order())
        throw ParseError("line " + std::to_string(section_line) + ": declared order " +
                         std::to_string(out.declared_order) + " but the rules have order " +
                         std::to_string(out.section.order()));
    return out;
}

void install_names(const ActionSpecFile& spec) {
    active_names().independents = spec.independents;
    active_names().dependents = spec.dependents;
}

Frame build_frame(const ActionSpecFile& spec) {
    install_names(spec);
    return Frame(spec.ctx(), spec.generators, spec.section);
}

} // namespace mfk
