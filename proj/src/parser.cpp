#include "topo/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace topo {
namespace {

struct Token {
    std::string text;
    int line, column;
};

struct Statement {
    std::vector<Token> tokens;
};

std::vector<Statement> tokenize(const std::string &text)
{
    std::vector<Statement> statements;
    Statement current;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto flush = [&] {
        if (!current.tokens.empty()) statements.push_back(std::move(current));
        current = {};
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i, ++column;
            continue;
        }
        if (c == '\n' || c == ';') {
            flush();
            ++i;
            if (c == '\n') ++line, column = 1;
            else ++column;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i, ++column;
            continue;
        }
        Token tok{{}, line, column};
        while (i < text.size()) {
            char d = text[i];
            if (std::isspace(static_cast<unsigned char>(d)) || d == ';' || d == '#') break;
            tok.text += d;
            ++i, ++column;
        }
        current.tokens.push_back(std::move(tok));
    }
    flush();
    return statements;
}

Int parse_int(const Token &tok)
{
    const std::string &s = tok.text;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError(tok.line, tok.column, "expected integer, got '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(tok.line, tok.column, "expected integer, got '" + s + "'");
    return Int(s);
}

}  // namespace

ParsedDiagram parse_diagram(const std::string &text)
{
    std::vector<std::string> labels;
    std::vector<Int> framings;
    std::map<std::string, std::size_t> index;
    std::map<std::pair<std::size_t, std::size_t>, Int> lk;
    std::map<std::string, Int> rot;
    std::set<std::string> l0;

    struct PendingLk {
        Token a, b, value;
    };
    std::vector<PendingLk> pending_lk;
    std::vector<Token> pending_rot_labels, pending_l0;
    std::map<std::string, Int> pending_rot;

    auto declare = [&](const Token &tok, Int framing) {
        if (index.count(tok.text))
            throw ParseError(tok.line, tok.column, "duplicate component '" + tok.text + "'");
        index[tok.text] = labels.size();
        labels.push_back(tok.text);
        framings.push_back(std::move(framing));
    };

    for (const Statement &st : tokenize(text)) {
        const Token &head = st.tokens[0];
        auto need = [&](std::size_t n) {
            if (st.tokens.size() != n)
                throw ParseError(head.line, head.column,
                                 "'" + head.text + "' expects " + std::to_string(n - 1) + " arguments");
        };
        if (head.text == "comp") {
            need(3);
            declare(st.tokens[1], parse_int(st.tokens[2]));
        } else if (head.text == "lk") {
            need(4);
            pending_lk.push_back({st.tokens[1], st.tokens[2], st.tokens[3]});
        } else if (head.text == "chain") {
            if (st.tokens.size() < 2)
                throw ParseError(head.line, head.column, "'chain' expects at least one framing");
            std::size_t base = labels.size();
            for (std::size_t k = 1; k < st.tokens.size(); ++k) {
                Token synthetic{"S" + std::to_string(base + k), head.line, head.column};
                declare(synthetic, parse_int(st.tokens[k]));
                if (k > 1) {
                    std::size_t i = labels.size() - 2, j = labels.size() - 1;
                    lk[{i, j}] = 1;
                }
            }
        } else if (head.text == "rot") {
            need(3);
            pending_rot_labels.push_back(st.tokens[1]);
            pending_rot[st.tokens[1].text] = parse_int(st.tokens[2]);
        } else if (head.text == "l0") {
            need(2);
            pending_l0.push_back(st.tokens[1]);
        } else {
            throw ParseError(head.line, head.column, "unknown statement '" + head.text + "'");
        }
    }

    auto lookup = [&](const Token &tok) -> std::size_t {
        auto it = index.find(tok.text);
        if (it == index.end())
            throw ParseError(tok.line, tok.column, "undeclared component '" + tok.text + "'");
        return it->second;
    };

    for (const PendingLk &p : pending_lk) {
        std::size_t i = lookup(p.a), j = lookup(p.b);
        if (i == j) throw ParseError(p.a.line, p.a.column, "lk of a component with itself (use comp framing)");
        auto key = std::minmax(i, j);
        Int v = parse_int(p.value);
        auto it = lk.find({key.first, key.second});
        if (it != lk.end() && it->second != v)
            throw ParseError(p.a.line, p.a.column,
                             "conflicting linking numbers for '" + p.a.text + "' and '" + p.b.text + "'");
        lk[{key.first, key.second}] = v;
    }
    for (const Token &t : pending_rot_labels) lookup(t);
    for (const Token &t : pending_l0) {
        lookup(t);
        l0.insert(t.text);
    }
    rot = std::move(pending_rot);

    const std::size_t k = labels.size();
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = framings[i];
    for (const auto &[key, v] : lk) m(key.first, key.second) = m(key.second, key.first) = v;

    ParsedDiagram out;
    out.link = make_link(std::move(labels), std::move(m));
    out.rot = std::move(rot);
    out.l0 = std::move(l0);
    return out;
}

FramedLink parse_link(const std::string &text) { return parse_diagram(text).link; }

std::string serialize_link(const FramedLink &link)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < link.size(); ++i)
        out << "comp " << link.labels[i] << ' ' << link.framing(i) << '\n';
    for (std::size_t i = 0; i < link.size(); ++i)
        for (std::size_t j = i + 1; j < link.size(); ++j)
            if (link.lk(i, j) != 0)
                out << "lk " << link.labels[i] << ' ' << link.labels[j] << ' ' << link.lk(i, j) << '\n';
    return out.str();
}

std::string serialize_diagram(const ParsedDiagram &diagram)
{
    std::ostringstream out;
    out << serialize_link(diagram.link);
    for (const auto &label : diagram.link.labels) {
        auto it = diagram.rot.find(label);
        if (it != diagram.rot.end() && it->second != 0)
            out << "rot " << label << ' ' << it->second << '\n';
    }
    for (const auto &label : diagram.link.labels)
        if (diagram.l0.count(label)) out << "l0 " << label << '\n';
    return out.str();
}

}  // namespace topo
