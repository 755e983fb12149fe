#include "xsb/ladder.hpp"

#include "xsb/detail/scan.hpp"
#include "xsb/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace xsb {

std::string_view kind_name(SymbolKind k) {
    switch (k) {
    case SymbolKind::spinor: return "spinor";
    case SymbolKind::scalar: return "scalar";
    case SymbolKind::homogeneous_spinor: return "homogeneous-spinor";
    case SymbolKind::linear_spinor: return "linear-spinor";
    case SymbolKind::bilinear_spinor: return "bilinear-spinor";
    case SymbolKind::homogeneous_scalar: return "homogeneous-scalar";
    case SymbolKind::bilinear_scalar: return "bilinear-scalar";
    }
    return "?";
}

bool is_spinor_kind(SymbolKind k) {
    return k == SymbolKind::spinor || k == SymbolKind::homogeneous_spinor ||
           k == SymbolKind::linear_spinor || k == SymbolKind::bilinear_spinor;
}

std::string_view tactic_name(Tactic t) {
    switch (t) {
    case Tactic::embed: return "embed";
    case Tactic::energy: return "energy";
    case Tactic::meet: return "meet";
    case Tactic::interpolate: return "interpolate";
    case Tactic::bilinear_kg: return "bilinear_kg";
    case Tactic::bilinear_dirac: return "bilinear_dirac";
    case Tactic::axiom: return "axiom";
    }
    return "?";
}

const Symbol* Ladder::find_symbol(std::string_view name) const {
    for (const auto& s : symbols) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

namespace {

constexpr SymbolKind all_kinds[] = {
    SymbolKind::spinor, SymbolKind::scalar, SymbolKind::homogeneous_spinor, SymbolKind::linear_spinor,
    SymbolKind::bilinear_spinor, SymbolKind::homogeneous_scalar, SymbolKind::bilinear_scalar,
};

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    std::size_t column() const { return pos_ + 1; }
    std::size_t line() const { return line_; }

    bool at_end() {
        detail::skip_blanks(text_, pos_);
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(std::string msg, std::vector<std::string> expected = {}) const {
        throw ParseError(line_, column(), std::move(msg), std::move(expected));
    }

    bool next_is(char c) {
        detail::skip_blanks(text_, pos_);
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::string word(const std::string& what) {
        detail::skip_blanks(text_, pos_);
        std::string w = try_word();
        if (w.empty()) fail("expected " + what, {what});
        return w;
    }

    bool accept_keyword(std::string_view kw) {
        detail::skip_blanks(text_, pos_);
        std::size_t save = pos_;
        if (try_word() == kw) return true;
        pos_ = save;
        return false;
    }

    void expect_keyword(std::string_view kw) {
        if (!accept_keyword(kw)) fail("expected '" + std::string(kw) + "'", {"'" + std::string(kw) + "'"});
    }

    bool accept(char c) {
        detail::skip_blanks(text_, pos_);
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail("unexpected input", {std::string("'") + c + "'"});
    }

    Exponent exponent() {
        detail::skip_blanks(text_, pos_);
        return detail::scan_exponent(text_, pos_, line_, 1);
    }

    Space space() {
        detail::skip_blanks(text_, pos_);
        return detail::scan_space(text_, pos_, line_, 1);
    }

    GoalSpace goal_space() {
        detail::skip_blanks(text_, pos_);
        return detail::scan_goal_space(text_, pos_, line_, 1);
    }

    std::string quoted() {
        detail::skip_blanks(text_, pos_);
        if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string", {"'\"'"});
        std::size_t end = text_.find('"', pos_ + 1);
        if (end == std::string_view::npos) fail("unterminated string");
        std::string out(text_.substr(pos_ + 1, end - pos_ - 1));
        pos_ = end + 1;
        return out;
    }

private:
    std::string try_word() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size()) {
                unsigned char c = static_cast<unsigned char>(text_[pos_]);
                if (std::isalnum(c) || c == '_' || (c == '-' && pos_ + 1 < text_.size() &&
                                                    std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])))) {
                    ++pos_;
                } else {
                    break;
                }
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

// Drops a trailing `#` comment, ignoring `#` inside quoted strings.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        else if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

class Parser {
public:
    Ladder run(std::string_view text) {
        ladder_.source = std::string(text);
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            parse_line(strip_comment(line), line_no);
            if (end == text.size()) break;
            start = end + 1;
        }
        return std::move(ladder_);
    }

private:
    void parse_line(std::string_view line, std::size_t line_no) {
        LineCursor cur(line, line_no);
        if (cur.at_end()) return;
        std::string head = cur.word("a declaration ('symbol', 'hyp', 'step' or 'goal')");
        if (head == "symbol") parse_symbol(cur);
        else if (head == "hyp") parse_hyp(cur);
        else if (head == "step") parse_step(cur);
        else if (head == "goal") parse_goal(cur);
        else throw ParseError(line_no, 1, "unknown declaration '" + head + "'", {"'symbol'", "'hyp'", "'step'", "'goal'"});
        if (!cur.at_end()) cur.fail("unexpected trailing input", {"end of line"});
    }

    void claim_name(LineCursor& cur, const std::string& name) {
        if (!names_.insert(name).second) cur.fail("duplicate identifier '" + name + "'");
    }

    std::string declared_symbol(LineCursor& cur) {
        std::string name = cur.word("a symbol name");
        if (!ladder_.find_symbol(name)) cur.fail("undeclared symbol '" + name + "'");
        return name;
    }

    std::string header_id(LineCursor& cur) {
        std::string id = cur.word("an identifier");
        claim_name(cur, id);
        cur.expect(':');
        return id;
    }

    void parse_symbol(LineCursor& cur) {
        std::string name = cur.word("a symbol name");
        claim_name(cur, name);
        cur.expect_keyword("kind");
        std::string kind = cur.word("a symbol kind");
        for (SymbolKind k : all_kinds) {
            if (kind_name(k) == kind) {
                ladder_.symbols.push_back({name, k, cur.line()});
                return;
            }
        }
        std::vector<std::string> expected;
        for (SymbolKind k : all_kinds) expected.emplace_back(kind_name(k));
        cur.fail("unknown symbol kind '" + kind + "'", expected);
    }

    void parse_hyp(LineCursor& cur) {
        Hypothesis h;
        h.line = cur.line();
        h.id = header_id(cur);
        h.symbol = declared_symbol(cur);
        cur.expect_keyword("in");
        h.space = cur.space();
        cur.expect_keyword("axiom");
        h.axiom = cur.word("an axiom name");
        memberships_.insert(h.id);
        ladder_.hypotheses.push_back(std::move(h));
    }

    Ref ref(LineCursor& cur) {
        std::string r = cur.word("a reference");
        if (!memberships_.count(r) && !ladder_.find_symbol(r)) {
            cur.fail("unknown reference '" + r + "'", {"an earlier hyp/step id", "a declared symbol"});
        }
        return r;
    }

    std::vector<Ref> ref_list(LineCursor& cur) {
        std::vector<Ref> out;
        cur.expect('(');
        do {
            out.push_back(ref(cur));
        } while (cur.accept(','));
        cur.expect(')');
        return out;
    }

    TacticCall tactic(LineCursor& cur) {
        TacticCall t;
        std::string name = cur.word("a tactic");
        if (name == "embed") {
            t.kind = Tactic::embed;
            t.slab = cur.accept_keyword("slab");
            if (cur.next_is('(')) t.refs = ref_list(cur);
        } else if (name == "energy") {
            t.kind = Tactic::energy;
            if (cur.accept_keyword("from")) {
                if (cur.accept_keyword("sobolev_time_product")) {
                    t.via_sobolev_product = true;
                    t.refs = ref_list(cur);
                    if (t.refs.size() != 2) cur.fail("sobolev_time_product takes two references");
                } else {
                    t.refs.push_back(ref(cur));
                }
            } else {
                t.refs = ref_list(cur);
                if (t.refs.size() != 1) cur.fail("energy takes one source reference");
            }
        } else if (name == "meet") {
            t.kind = Tactic::meet;
            t.refs = ref_list(cur);
        } else if (name == "interpolate") {
            t.kind = Tactic::interpolate;
            cur.expect('(');
            t.refs.push_back(ref(cur));
            cur.expect(',');
            t.refs.push_back(ref(cur));
            if (cur.accept(',')) t.theta = cur.exponent();
            cur.expect(')');
        } else if (name == "bilinear_kg" || name == "bilinear_dirac") {
            t.kind = name == "bilinear_kg" ? Tactic::bilinear_kg : Tactic::bilinear_dirac;
            if (cur.accept_keyword("using")) t.using_refs = ref_list(cur);
            cur.expect_keyword("angle");
            cur.expect('(');
            Exponent a = cur.exponent();
            cur.expect(',');
            Exponent b = cur.exponent();
            cur.expect(',');
            Exponent c = cur.exponent();
            cur.expect(')');
            t.angle = std::array<Exponent, 3>{a, b, c};
        } else if (name == "axiom") {
            t.kind = Tactic::axiom;
            t.axiom = cur.word("an axiom name");
        } else {
            throw ParseError(cur.line(), cur.column() - name.size(), "unknown tactic '" + name + "'",
                             {"embed", "energy", "meet", "interpolate", "bilinear_kg", "bilinear_dirac", "axiom"});
        }
        return t;
    }

    void parse_step(LineCursor& cur) {
        Step s;
        s.line = cur.line();
        s.id = header_id(cur);
        s.symbol = declared_symbol(cur);
        cur.expect_keyword("in");
        s.claim = cur.space();
        cur.expect_keyword("by");
        s.tactic = tactic(cur);
        while (cur.accept_keyword("note")) s.notes.push_back(cur.quoted());
        memberships_.insert(s.id);
        ladder_.steps.push_back(std::move(s));
    }

    void parse_goal(LineCursor& cur) {
        Goal g;
        g.line = cur.line();
        g.id = header_id(cur);
        g.symbol = declared_symbol(cur);
        cur.expect_keyword("in");
        g.space = cur.goal_space();
        ladder_.goals.push_back(std::move(g));
    }

    Ladder ladder_;
    std::set<std::string> names_;
    std::set<std::string> memberships_;
};

} // namespace

Ladder parse_ladder(std::string_view text) { return Parser{}.run(text); }

Ladder load_ladder(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open ladder file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ladder(buf.str());
}

} // namespace xsb
