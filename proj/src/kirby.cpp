#include "topo/kirby.hpp"

#include <cctype>
#include <sstream>

namespace topo {

H1Presentation TrackedLink::h1() const { return boundary_h1(link); }

std::vector<Int> &TrackedLink::class_of(const std::string &name)
{
    for (std::size_t i = 0; i < class_names.size(); ++i)
        if (class_names[i] == name) return classes[i];
    throw std::invalid_argument("no tracked class named '" + name + "'");
}

TrackedLink tracked(FramedLink link)
{
    TrackedLink t;
    t.link = std::move(link);
    t.class_names = t.link.labels;
    for (std::size_t i = 0; i < t.link.size(); ++i) {
        std::vector<Int> v(t.link.size());
        v[i] = 1;
        t.classes.push_back(std::move(v));
    }
    t.l0.assign(t.link.size(), 0);
    return t;
}

namespace {

void do_blow_up(TrackedLink &t, const BlowUp &m)
{
    if (m.sign != 1 && m.sign != -1) throw MoveError("blow-up sign must be +1 or -1");
    if (t.link.find(m.new_label)) throw MoveError("label '" + m.new_label + "' already in use");
    const std::size_t k = t.link.size();
    std::vector<Int> mult(k);
    for (const auto &[label, v] : m.multiplicities) mult[t.link.index_of(label)] += v;

    Matrix next(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            next(i, j) = t.link.lk(i, j) + m.sign * mult[i] * mult[j];
    for (std::size_t i = 0; i < k; ++i) next(i, k) = next(k, i) = m.sign * mult[i];
    next(k, k) = m.sign;

    std::vector<std::string> labels = t.link.labels;
    labels.push_back(m.new_label);
    t.link = make_link(std::move(labels), std::move(next));
    for (auto &v : t.classes) v.push_back(0);
    t.l0.push_back(0);
}

void do_blow_down(TrackedLink &t, const BlowDown &m)
{
    const std::size_t c = t.link.index_of(m.label);
    const Int &eps = t.link.framing(c);
    if (eps != 1 && eps != -1) throw MoveError("blow-down of '" + m.label + "': framing is not +1 or -1");
    if (t.l0[c]) throw MoveError("cannot blow down a surgered 1-handle");
    const std::size_t k = t.link.size();

    Matrix next(k - 1, k - 1);
    std::vector<std::string> labels;
    for (std::size_t i = 0, r = 0; i < k; ++i) {
        if (i == c) continue;
        labels.push_back(t.link.labels[i]);
        for (std::size_t j = 0, s = 0; j < k; ++j) {
            if (j == c) continue;
            next(r, s) = t.link.lk(i, j) - eps * t.link.lk(i, c) * t.link.lk(j, c);
            ++s;
        }
        ++r;
    }

    // The removed meridian satisfies eps*m_c + sum lk(c,j) m_j = 0; substitute
    // it out of every tracked class.
    for (auto &v : t.classes) {
        Int vc = v[c];
        std::vector<Int> next_v;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == c) continue;
            next_v.push_back(v[j] - eps * vc * t.link.lk(c, j));
        }
        v = std::move(next_v);
    }
    t.l0.erase(t.l0.begin() + static_cast<std::ptrdiff_t>(c));
    t.link = make_link(std::move(labels), std::move(next));
}

void do_slide(TrackedLink &t, const Slide &m)
{
    if (m.sign != 1 && m.sign != -1) throw MoveError("slide sign must be +1 or -1");
    const std::size_t i = t.link.index_of(m.moving), j = t.link.index_of(m.over);
    if (i == j) throw MoveError("cannot slide a component over itself");
    const std::size_t k = t.link.size();

    Matrix next = t.link.linking;
    next(i, i) = t.link.framing(i) + t.link.framing(j) + 2 * m.sign * t.link.lk(i, j);
    for (std::size_t c = 0; c < k; ++c) {
        if (c == i || c == j) continue;
        next(i, c) = next(c, i) = t.link.lk(i, c) + m.sign * t.link.lk(j, c);
    }
    next(i, j) = next(j, i) = t.link.lk(i, j) + m.sign * t.link.framing(j);
    t.link.linking = std::move(next);

    for (auto &v : t.classes) v[i] += m.sign * v[j];
}

void do_surger(TrackedLink &t, const Surger1Handle &m)
{
    const std::size_t c = t.link.index_of(m.label);
    t.link.linking(c, c) = 0;
    t.l0[c] = 1;
}

}  // namespace

void apply_move(TrackedLink &t, const Move &move)
{
    std::visit([&](const auto &m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BlowUp>) do_blow_up(t, m);
        else if constexpr (std::is_same_v<T, BlowDown>) do_blow_down(t, m);
        else if constexpr (std::is_same_v<T, Slide>) do_slide(t, m);
        else do_surger(t, m);
    }, move);
}

TrackedLink run_script(TrackedLink start, const MoveScript &script)
{
    // When the tracked classes are exactly the starting meridians, each step
    // can be checked to transport the whole group isomorphically; otherwise
    // only the order invariant is available.
    bool full_check = start.class_names == start.link.labels;
    if (full_check)
        for (std::size_t i = 0; i < start.classes.size() && full_check; ++i)
            for (std::size_t j = 0; j < start.classes[i].size(); ++j)
                if (start.classes[i][j] != Int(i == j ? 1 : 0)) {
                    full_check = false;
                    break;
                }

    H1Presentation origin = start.h1();
    const bool finite = origin.is_finite();
    Int order = finite ? origin.order() : Int(0);

    TrackedLink current = std::move(start);
    for (std::size_t step = 0; step < script.moves.size(); ++step) {
        try {
            apply_move(current, script.moves[step]);
        } catch (const std::exception &e) {
            throw MoveError("step " + std::to_string(step) + ": " + e.what());
        }
        H1Presentation now = current.h1();
        if (finite) {
            if (!now.is_finite() || now.order() != order)
                throw MoveError("step " + std::to_string(step) + ": boundary group order changed");
            if (full_check) {
                GeneratorMap map{origin, now, current.classes};
                if (!verify_iso(map).ok())
                    throw MoveError("step " + std::to_string(step) +
                                    ": tracked classes no longer present the group isomorphically");
            }
        }
    }
    return current;
}

namespace {

std::vector<std::vector<std::string>> script_statements(const std::string &text)
{
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty()) current.push_back(std::move(tok)), tok.clear();
    };
    auto flush_stmt = [&] {
        flush_tok();
        if (!current.empty()) out.push_back(std::move(current)), current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            flush_stmt();
        } else if (c == '\n' || c == ';') flush_stmt();
        else if (std::isspace(static_cast<unsigned char>(c))) flush_tok();
        else tok += c;
    }
    flush_stmt();
    return out;
}

int parse_sign(const std::string &s)
{
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw std::invalid_argument("expected '+' or '-', got '" + s + "'");
}

}  // namespace

MoveScript parse_script(const std::string &text)
{
    MoveScript script;
    for (const auto &st : script_statements(text)) {
        const std::string &head = st[0];
        if (head == "blowup") {
            if (st.size() < 3 || st.size() % 2 != 1)
                throw std::invalid_argument("blowup expects: blowup <+|-> <label> [<label> <mult>]...");
            BlowUp m;
            m.sign = parse_sign(st[1]);
            m.new_label = st[2];
            for (std::size_t i = 3; i + 1 < st.size(); i += 2)
                m.multiplicities.emplace_back(st[i], Int(st[i + 1]));
            script.moves.push_back(std::move(m));
        } else if (head == "blowdown") {
            if (st.size() != 2) throw std::invalid_argument("blowdown expects one label");
            script.moves.push_back(BlowDown{st[1]});
        } else if (head == "slide") {
            if (st.size() != 4) throw std::invalid_argument("slide expects: slide <moving> <over> <+|->");
            script.moves.push_back(Slide{st[1], st[2], parse_sign(st[3])});
        } else if (head == "surger") {
            if (st.size() != 2) throw std::invalid_argument("surger expects one label");
            script.moves.push_back(Surger1Handle{st[1]});
        } else {
            throw std::invalid_argument("unknown move '" + head + "'");
        }
    }
    return script;
}

std::string serialize_script(const MoveScript &script)
{
    std::ostringstream out;
    for (const Move &move : script.moves) {
        std::visit([&](const auto &m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, BlowUp>) {
                out << "blowup " << (m.sign > 0 ? '+' : '-') << ' ' << m.new_label;
                for (const auto &[label, mult] : m.multiplicities) out << ' ' << label << ' ' << mult;
            } else if constexpr (std::is_same_v<T, BlowDown>) {
                out << "blowdown " << m.label;
            } else if constexpr (std::is_same_v<T, Slide>) {
                out << "slide " << m.moving << ' ' << m.over << ' ' << (m.sign > 0 ? '+' : '-');
            } else {
                out << "surger " << m.label;
            }
        }, move);
        out << '\n';
    }
    return out.str();
}

}  // namespace topo
