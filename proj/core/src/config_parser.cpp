#include <cctype>
#include <set>

#include "emext/emalg.hpp"

namespace emext {

namespace {

enum class Tok { word, string, number, lbrace, rbrace, lbrack, rbrack, equals, comma, sep, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
};

[[noreturn]] void syntax(int line, const std::string& msg) {
    throw Error(ErrorCode::invalid_input, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1;
    int bracket_depth = 0;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            if (bracket_depth == 0) out.push_back({Tok::sep, "\n", line});
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '"') {
            std::string s;
            ++i;
            while (i < src.size() && src[i] != '"') {
                if (src[i] == '\n') syntax(line, "unterminated string");
                if (src[i] == '\\' && i + 1 < src.size()) ++i;
                s += src[i++];
            }
            if (i == src.size()) syntax(line, "unterminated string");
            ++i;
            out.push_back({Tok::string, s, line});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '-'))
                s += src[i++];
            out.push_back({Tok::word, s, line});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            std::string s(1, c);
            ++i;
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '/')) s += src[i++];
            out.push_back({Tok::number, s, line});
        } else {
            Tok k;
            switch (c) {
            case '{': k = Tok::lbrace; break;
            case '}': k = Tok::rbrace; break;
            case '[': k = Tok::lbrack; ++bracket_depth; break;
            case ']': k = Tok::rbrack; bracket_depth = std::max(0, bracket_depth - 1); break;
            case '=': k = Tok::equals; break;
            case ',': k = Tok::comma; break;
            case ';': k = Tok::sep; break;
            default: syntax(line, std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), line});
            ++i;
        }
    }
    out.push_back({Tok::end, "", line});
    return out;
}

Rat parse_rational(const Token& t) {
    Rat r;
    std::string s = t.text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    if (num.empty() || num == "-" || (slash != std::string::npos && slash + 1 == s.size()))
        syntax(t.line, "malformed number '" + t.text + "'");
    if (r.set_str(s, 10) != 0) syntax(t.line, "malformed number '" + t.text + "'");
    if (r.get_den() == 0) syntax(t.line, "zero denominator in '" + t.text + "'");
    r.canonicalize();
    return r;
}

struct Value {
    enum Kind { bare, quoted, numeric, bracketed } kind;
    std::string text;
    Rat num;
    std::vector<Rat> items;
    int line;

    long integer(const std::string& key) const {
        if (kind != numeric || num.get_den() != 1 || !num.get_num().fits_slong_p())
            syntax(line, key + " expects an integer");
        return num.get_num().get_si();
    }
    std::size_t count(const std::string& key) const {
        long v = integer(key);
        if (v < 0) syntax(line, key + " expects a non-negative integer");
        return static_cast<std::size_t>(v);
    }
    std::string name(const std::string& key) const {
        if (kind != bare && kind != quoted) syntax(line, key + " expects a name");
        return text;
    }
    bool boolean(const std::string& key) const {
        if (kind == numeric) return integer(key) != 0;
        if (kind == bare && (text == "true" || text == "yes")) return true;
        if (kind == bare && (text == "false" || text == "no")) return false;
        syntax(line, key + " expects true or false");
    }
    std::vector<long> integers(const std::string& key) const {
        if (kind != bracketed) syntax(line, key + " expects a bracketed list");
        std::vector<long> out;
        for (const auto& r : items) {
            if (r.get_den() != 1 || !r.get_num().fits_slong_p()) syntax(line, key + " expects integers");
            out.push_back(r.get_num().get_si());
        }
        return out;
    }
    std::vector<Rat> rationals(const std::string& key) const {
        if (kind != bracketed) syntax(line, key + " expects a bracketed list");
        return items;
    }
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Document run() {
        Document doc;
        bool have_algebra = false;
        std::set<std::string> algebra_keys;
        std::map<std::string, std::set<std::string>> point_keys;
        for (;;) {
            skip_seps();
            const Token& t = peek();
            if (t.kind == Tok::end) break;
            if (t.kind != Tok::word) syntax(t.line, "expected a section name");
            const std::string section = next().text;
            if (section == "algebra") {
                if (have_algebra) syntax(t.line, "duplicate algebra section");
                have_algebra = true;
                expect(Tok::lbrace, "'{'");
                block([&] { algebra_stmt(doc.algebra, algebra_keys); });
            } else if (section == "point") {
                PointSpec p;
                p.line = t.line;
                p.id = expect(Tok::string, "a quoted point id").text;
                p.orbit = p.id;
                if (doc.algebra.find_point(p.id)) syntax(t.line, "duplicate point \"" + p.id + "\"");
                expect(Tok::lbrace, "'{'");
                auto& keys = point_keys[p.id];
                block([&] { point_stmt(p, keys); });
                doc.algebra.points.push_back(std::move(p));
            } else if (section == "rep") {
                EvalRepSpec r;
                r.line = t.line;
                r.id = expect(Tok::string, "a quoted rep id").text;
                if (doc.reps.count(r.id)) syntax(t.line, "duplicate rep \"" + r.id + "\"");
                expect(Tok::lbrace, "'{'");
                bool tagged = false;
                block([&] { rep_stmt(r, tagged); });
                doc.reps.emplace(r.id, std::move(r));
            } else {
                syntax(t.line, "unknown section '" + section + "'");
            }
        }
        if (!have_algebra) syntax(1, "missing algebra section");
        finish(doc.algebra, algebra_keys, point_keys);
        return doc;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    void skip_seps() {
        while (peek().kind == Tok::sep) ++pos_;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) syntax(peek().line, std::string("expected ") + what);
        return next();
    }

    template <class F>
    void block(F stmt) {
        for (;;) {
            skip_seps();
            if (peek().kind == Tok::rbrace) {
                next();
                return;
            }
            if (peek().kind == Tok::end) syntax(peek().line, "unterminated block");
            stmt();
            if (peek().kind != Tok::sep && peek().kind != Tok::rbrace)
                syntax(peek().line, "expected ';' or a newline after a statement");
        }
    }

    Value value() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::word: return {Value::bare, t.text, 0, {}, t.line};
        case Tok::string: return {Value::quoted, t.text, 0, {}, t.line};
        case Tok::number: return {Value::numeric, t.text, parse_rational(t), {}, t.line};
        case Tok::lbrack: {
            Value v{Value::bracketed, "", 0, {}, t.line};
            if (peek().kind == Tok::rbrack) {
                next();
                return v;
            }
            for (;;) {
                const Token& item = expect(Tok::number, "a number");
                v.items.push_back(parse_rational(item));
                if (peek().kind == Tok::comma) {
                    next();
                    continue;
                }
                expect(Tok::rbrack, "']'");
                return v;
            }
        }
        default: syntax(t.line, "expected a value");
        }
    }

    std::pair<std::string, Value> assignment(std::set<std::string>& seen) {
        const Token& key = expect(Tok::word, "a key");
        expect(Tok::equals, "'='");
        if (!seen.insert(key.text).second) syntax(key.line, "duplicate key '" + key.text + "'");
        return {key.text, value()};
    }

    static RootSystemSpec system(const Value& v, const std::string& key) {
        try {
            return RootSystemSpec::parse(v.name(key));
        } catch (const Error& e) {
            syntax(v.line, e.what());
        }
    }

    void algebra_stmt(AlgebraConfig& a, std::set<std::string>& seen) {
        const int line = peek().line;
        auto [key, v] = assignment(seen);
        if (key == "family") {
            const std::string f = v.name(key);
            if (f == "untwisted" || f == "current") a.family = Family::untwisted;
            else if (f == "multiloop") a.family = Family::multiloop;
            else if (f == "exchange") a.family = Family::exchange;
            else if (f == "onsager") a.family = Family::onsager;
            else syntax(line, "unknown family '" + f + "'");
        } else if (key == "g") {
            a.g_spec = system(v, key);
        } else if (key == "g_ab_dim") {
            a.g_ab_dim = v.count(key);
        } else if (key == "n") {
            a.n = v.count(key);
        } else if (key == "orders") {
            a.orders = v.integers(key);
        } else if (key == "s") {
            a.s_spec = system(v, key);
        } else if (key == "g0") {
            a.g0_spec = system(v, key);
        } else if (key == "g0_ab_dim") {
            a.g0_ab_dim = v.count(key);
        } else if (key == "nu") {
            a.nu = v.integers(key);
        } else if (key == "pair") {
            if (v.name(key) != "sl2") syntax(line, "the only built-in pair is \"sl2\"");
            a.builtin_sl2_pair = true;
        } else {
            syntax(line, "unknown algebra key '" + key + "'");
        }
    }

    void point_stmt(PointSpec& p, std::set<std::string>& seen) {
        const int line = peek().line;
        auto [key, v] = assignment(seen);
        if (key == "tangent_dim") {
            p.tangent_dim = v.count(key);
        } else if (key == "fixed") {
            p.fixed_point = v.boolean(key);
        } else if (key == "stabilizer") {
            const std::string s = v.name(key);
            if (s == "trivial") p.stabilizer = Stabilizer::trivial;
            else if (s == "full") p.stabilizer = Stabilizer::full;
            else syntax(line, "stabilizer is trivial or full");
        } else if (key == "param") {
            if (v.kind != Value::numeric) syntax(line, "param expects a number");
            p.param = v.num;
        } else if (key == "orbit") {
            p.orbit = v.name(key);
        } else {
            syntax(line, "unknown point key '" + key + "'");
        }
    }

    void rep_stmt(EvalRepSpec& r, bool& tagged) {
        const Token& head = expect(Tok::word, "'at' or 'noneval'");
        if (head.text == "noneval") {
            expect(Tok::equals, "'='");
            if (tagged) syntax(head.line, "duplicate noneval tag");
            tagged = true;
            Value v = value();
            if (v.kind != Value::quoted) syntax(head.line, "noneval expects a quoted tag");
            r.noneval_tag = v.text;
            return;
        }
        if (head.text != "at") syntax(head.line, "unknown rep statement '" + head.text + "'");
        const std::string pid = expect(Tok::string, "a quoted point id").text;
        if (r.support.count(pid)) syntax(head.line, "point \"" + pid + "\" listed twice");
        IrrepLabel label;
        std::set<std::string> seen;
        while (peek().kind == Tok::word) {
            const int line = peek().line;
            auto [key, v] = assignment(seen);
            if (key == "weight") label.highest_weight = v.integers(key);
            else if (key == "charge") label.charges = v.rationals(key);
            else syntax(line, "unknown rep key '" + key + "'");
        }
        r.support.emplace(pid, std::move(label));
    }

    static void finish(AlgebraConfig& a, const std::set<std::string>& keys,
                       const std::map<std::string, std::set<std::string>>& point_keys) {
        if (!keys.count("family")) syntax(1, "algebra: family is required");
        if (a.family == Family::onsager) {
            const bool pair_given = keys.count("g0") || keys.count("g0_ab_dim") || keys.count("nu");
            if (a.builtin_sl2_pair && pair_given)
                syntax(1, "algebra: pair = \"sl2\" cannot be combined with g0, g0_ab_dim or nu");
            if (a.builtin_sl2_pair || (!pair_given && a.g_spec == RootSystemSpec::parse("A1"))) {
                a.builtin_sl2_pair = true;
                if (keys.count("g") && !(a.g_spec == RootSystemSpec::parse("A1")))
                    syntax(1, "algebra: the sl2 pair needs g = A1");
                a.g_spec = RootSystemSpec::parse("A1");
                a.g0_spec = {};
                a.g0_ab_dim = 1;
                a.nu = {};
            } else if (!keys.count("g0_ab_dim") || !keys.count("nu")) {
                syntax(1, "algebra: onsager needs g0, g0_ab_dim and nu (or the built-in pair \"sl2\")");
            }
        } else if (a.builtin_sl2_pair) {
            syntax(1, "algebra: pair only applies to the onsager family");
        }
        if (a.family == Family::exchange && !keys.count("g")) {
            a.g_spec = a.s_spec;
            a.g_spec.components.insert(a.g_spec.components.end(), a.s_spec.components.begin(),
                                       a.s_spec.components.end());
        }
        for (auto& p : a.points) {
            const auto& pk = point_keys.at(p.id);
            if (a.family == Family::multiloop && !pk.count("tangent_dim")) p.tangent_dim = a.n;
            if (pk.count("stabilizer") && !pk.count("fixed")) p.fixed_point = p.stabilizer == Stabilizer::full;
            if (pk.count("fixed") && !pk.count("stabilizer"))
                p.stabilizer = p.fixed_point ? Stabilizer::full : Stabilizer::trivial;
            if (a.family == Family::onsager && p.fixed_point && !p.param) p.param = Rat(1);
        }
    }
};

}  // namespace

Document parse_document(const std::string& text) { return Parser(tokenize(text)).run(); }

}  // namespace emext
