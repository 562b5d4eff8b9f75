#include "amr/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace amr {

namespace {

const std::set<std::string> kSectionNames{"props", "states", "init",   "labels",
                                          "trans", "must",   "may",    "blocks"};

[[noreturn]] void err(int line, const std::string& msg) { throw ModelParseError(msg, line); }

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void check_id(const std::string& id, int line) {
    if (!is_valid_identifier(id)) err(line, "invalid identifier '" + id + "'");
    if (is_reserved_identifier(id))
        err(line, "identifier '" + id + "' uses the reserved '_n' namespace");
    if (kSectionNames.count(id)) err(line, "identifier '" + id + "' is a reserved keyword");
}

Literal parse_literal(const std::string& tok, int line) {
    std::string body = tok;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '!')) {
        neg = true;
        body = body.substr(1);
    }
    check_id(body, line);
    return Literal(body, neg);
}

struct Sections {
    std::vector<std::string> props, states, init;
    std::map<std::string, std::vector<Literal>> labels;
    std::vector<std::pair<std::string, std::string>> trans, must, may;
    std::vector<AbstractionMap::Block> blocks;
    bool has_trans = false, has_must = false, has_may = false, has_blocks = false;
};

void parse_edges(const std::string& body, int line,
                 std::vector<std::pair<std::string, std::string>>& out) {
    auto arrow = body.find("->");
    if (arrow == std::string::npos) err(line, "expected 'source -> target, target'");
    std::string src = strip(body.substr(0, arrow));
    check_id(src, line);
    std::string rest = body.substr(arrow + 2);
    std::istringstream is(rest);
    std::string item;
    bool any = false;
    while (std::getline(is, item, ',')) {
        item = strip(item);
        if (item.empty()) err(line, "empty transition target");
        check_id(item, line);
        out.emplace_back(src, item);
        any = true;
    }
    if (!any) err(line, "transition with no target");
}

Sections parse_sections(const std::string& text) {
    Sections sec;
    std::istringstream is(text);
    std::string raw;
    std::string current;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string s = strip(raw);
        if (s.empty()) continue;

        auto colon = s.find(':');
        std::string head = colon == std::string::npos ? "" : strip(s.substr(0, colon));
        if (kSectionNames.count(head)) {
            current = head;
            std::string inline_body = strip(s.substr(colon + 1));
            if (head == "trans") sec.has_trans = true;
            if (head == "must") sec.has_must = true;
            if (head == "may") sec.has_may = true;
            if (head == "blocks") sec.has_blocks = true;
            if (!inline_body.empty()) {
                if (head == "props" || head == "states" || head == "init") {
                    for (const auto& w : split_ws(inline_body)) {
                        check_id(w, line);
                        (head == "props" ? sec.props : head == "states" ? sec.states : sec.init)
                            .push_back(w);
                    }
                } else {
                    err(line, "section '" + head + "' takes indented entries, not inline values");
                }
            }
            continue;
        }
        if (current.empty()) err(line, "content before any section header");
        if (current == "props" || current == "states" || current == "init") {
            for (const auto& w : split_ws(s)) {
                check_id(w, line);
                (current == "props" ? sec.props : current == "states" ? sec.states : sec.init)
                    .push_back(w);
            }
        } else if (current == "labels") {
            if (colon == std::string::npos) err(line, "expected 'state: literals'");
            check_id(head, line);
            std::vector<Literal> lits;
            for (const auto& w : split_ws(strip(s.substr(colon + 1))))
                lits.push_back(parse_literal(w, line));
            sec.labels[head] = std::move(lits);
        } else if (current == "trans" || current == "must" || current == "may") {
            parse_edges(s, line,
                        current == "trans" ? sec.trans : current == "must" ? sec.must : sec.may);
        } else if (current == "blocks") {
            if (colon == std::string::npos) err(line, "expected 'block: members'");
            check_id(head, line);
            AbstractionMap::Block b{head, {}};
            for (const auto& w : split_ws(strip(s.substr(colon + 1)))) {
                check_id(w, line);
                b.members.push_back(w);
            }
            sec.blocks.push_back(std::move(b));
        }
    }
    return sec;
}

} // namespace

ParsedModel parse_model(const std::string& text) {
    Sections sec = parse_sections(text);
    ParsedModel out;
    if (sec.has_trans && (sec.has_must || sec.has_may))
        err(0, "a model file has either trans: or must:/may:, not both");
    if (sec.has_trans && sec.has_blocks) err(0, "blocks: only applies to must/may model files");
    if (sec.has_trans) {
        KripkeStructure ks(sec.props, sec.states, sec.init, sec.trans, sec.labels);
        auto violations = validate_ks(ks);
        if (!violations.empty()) err(0, "invalid model: " + violations.front());
        out.ks = std::move(ks);
    } else if (sec.has_must || sec.has_may) {
        // may: lists the may-only transitions; must-transitions are may too.
        auto may = sec.may;
        for (const auto& e : sec.must) may.push_back(e);
        std::vector<int> sizes;
        if (sec.has_blocks) {
            AbstractionMap map(sec.blocks);
            for (const auto& s : sec.states) {
                if (!map.has_block(s)) err(0, "state " + s + " has no blocks: entry");
                sizes.push_back(
                    static_cast<int>(map.block(map.block_index(s)).members.size()));
            }
            out.blocks = std::move(map);
        }
        Kmts kmts(sec.props, sec.states, sec.init, sec.must, may, sec.labels, sizes);
        auto violations = validate_kmts(kmts);
        if (!violations.empty()) err(0, "invalid model: " + violations.front());
        out.kmts = std::move(kmts);
    } else {
        err(0, "model file declares neither trans: nor must:/may:");
    }
    return out;
}

ParsedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

namespace {

void print_header(std::ostream& os, const std::vector<std::string>& props,
                  const std::vector<std::string>& states, const std::vector<std::string>& init) {
    os << "props:";
    for (const auto& p : props) os << " " << p;
    os << "\nstates:";
    for (const auto& s : states) os << " " << s;
    os << "\ninit:";
    for (const auto& s : init) os << " " << s;
    os << "\n";
}

template <typename M>
void print_labels(std::ostream& os, const M& m) {
    os << "labels:\n";
    for (int i = 0; i < m.state_count(); ++i) {
        os << "  " << m.state_name(i) << ":";
        for (const auto& prop : m.props()) {
            auto v = m.label_value(i, prop);
            if (v) os << " " << (*v ? "" : "-") << prop;
        }
        os << "\n";
    }
}

template <typename M>
void print_edges(std::ostream& os, const M& m, const std::set<std::pair<int, int>>& edges) {
    for (int i = 0; i < m.state_count(); ++i) {
        bool first = true;
        for (const auto& [a, b] : edges) {
            if (a != i) continue;
            os << (first ? "  " + m.state_name(i) + " -> " : ", ") << m.state_name(b);
            first = false;
        }
        if (!first) os << "\n";
    }
}

std::vector<std::string> initial_names(const KripkeStructure& m) {
    std::vector<std::string> out;
    for (int i : m.initial_states()) out.push_back(m.state_name(i));
    return out;
}
std::vector<std::string> initial_names(const Kmts& m) {
    std::vector<std::string> out;
    for (int i : m.initial_states()) out.push_back(m.state_name(i));
    return out;
}

} // namespace

std::string print_ks(const KripkeStructure& m) {
    std::ostringstream os;
    print_header(os, m.props(), m.states(), initial_names(m));
    print_labels(os, m);
    os << "trans:\n";
    print_edges(os, m, m.edges());
    return os.str();
}

std::string print_kmts(const Kmts& m, const AbstractionMap* blocks) {
    std::ostringstream os;
    print_header(os, m.props(), m.states(), initial_names(m));
    print_labels(os, m);
    os << "must:\n";
    print_edges(os, m, m.must());
    std::set<std::pair<int, int>> may_only;
    for (const auto& e : m.may())
        if (!m.must().count(e)) may_only.insert(e);
    os << "may:\n";
    print_edges(os, m, may_only);
    if (blocks) {
        os << "blocks:\n";
        for (const auto& b : blocks->blocks()) {
            os << "  " << b.name << ":";
            for (const auto& s : b.members) os << " " << s;
            os << "\n";
        }
    }
    return os.str();
}

AbstractionMap parse_partition(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    std::vector<AbstractionMap::Block> blocks;
    while (std::getline(is, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string s = strip(raw);
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) err(line, "expected 'block: members'");
        std::string name = strip(s.substr(0, colon));
        check_id(name, line);
        AbstractionMap::Block b{name, {}};
        for (const auto& w : split_ws(strip(s.substr(colon + 1)))) {
            check_id(w, line);
            b.members.push_back(w);
        }
        if (b.members.empty()) err(line, "block " + name + " has no members");
        blocks.push_back(std::move(b));
    }
    if (blocks.empty()) err(0, "partition file declares no blocks");
    return AbstractionMap(std::move(blocks));
}

AbstractionMap load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_partition(buf.str());
}

std::string print_partition(const AbstractionMap& p) {
    std::ostringstream os;
    for (const auto& b : p.blocks()) {
        os << b.name << ":";
        for (const auto& s : b.members) os << " " << s;
        os << "\n";
    }
    return os.str();
}

} // namespace amr
