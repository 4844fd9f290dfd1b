#include "gradcon/gns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gradcon::gns {

using fano::pair_bit;
using fano::pair_index;
using fano::pair_unindex;
using fano::star;

Mask x_mask() {
    static const Mask m = [] {
        Mask out = 0;
        for (int i = 1; i <= 7; i++)
            for (int j = i + 1; j <= 7; j++) out |= pair_bit(i, j);
        return out;
    }();
    return m;
}

Mask diagonal_mask() {
    static const Mask m = [] {
        Mask out = 0;
        for (int j = 1; j <= 7; j++) out |= pair_bit(j, j);
        return out;
    }();
    return m;
}

namespace {

struct Implication {
    Mask premise;     // one or two pair bits
    Mask conclusion;  // P-set minus premise
};

// Deduplicated implication list of the generalised-nice closure system:
// {i,j},{i*j,k} in T  =>  P_{i,j,k} in T, over all 512 triples.
const std::vector<Implication>& gns_implications() {
    static const std::vector<Implication> imps = [] {
        std::map<Mask, Mask> collect;
        for (int i = 0; i < 8; i++)
            for (int j = 0; j < 8; j++)
                for (int k = 0; k < 8; k++) {
                    Mask prem = pair_bit(i, j) | pair_bit(star(i, j), k);
                    Mask concl = fano::p_set(i, j, k) & ~prem;
                    if (concl) collect[prem] |= concl;
                }
        std::vector<Implication> out;
        for (const auto& [p, c] : collect) out.push_back({p, c});
        return out;
    }();
    return imps;
}

// Same with the premise restricted to generating triplets, over the ground
// set X.
const std::vector<Implication>& nice_implications() {
    static const std::vector<Implication> imps = [] {
        std::map<Mask, Mask> collect;
        for (int i = 1; i <= 7; i++)
            for (int j = 1; j <= 7; j++)
                for (int k = 1; k <= 7; k++) {
                    if (!fano::is_generating_triplet(i, j, k)) continue;
                    Mask prem = pair_bit(i, j) | pair_bit(k, star(i, j));
                    Mask concl = fano::p_set(i, j, k) & ~prem;
                    if (concl) collect[prem] |= concl;
                }
        std::vector<Implication> out;
        for (const auto& [p, c] : collect) out.push_back({p, c});
        return out;
    }();
    return imps;
}

Mask close_under(const std::vector<Implication>& imps, Mask t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& imp : imps) {
            if ((t & imp.premise) == imp.premise && (t & imp.conclusion) != imp.conclusion) {
                t |= imp.conclusion;
                changed = true;
            }
        }
    }
    return t;
}

// Ganter's NextClosure over an arbitrary ground-position list.
std::vector<Mask> lectic_enumerate(const std::vector<int>& ground, Mask (*close)(Mask)) {
    std::vector<Mask> out;
    Mask a = close(0);
    out.push_back(a);
    while (true) {
        bool advanced = false;
        for (int pos = static_cast<int>(ground.size()) - 1; pos >= 0; pos--) {
            Mask bit = Mask{1} << ground[pos];
            if (a & bit) {
                a &= ~bit;
                continue;
            }
            Mask low = 0;
            for (int q = 0; q < pos; q++) low |= Mask{1} << ground[q];
            Mask b = close(a | bit);
            if (((b & low) | (a & low)) == (a & low)) {  // no new element below pos
                a = b;
                out.push_back(a);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

}  // namespace

bool is_gns(Mask t, TripleWitness* witness) {
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) {
            if (!(t & pair_bit(i, j))) continue;
            int ij = star(i, j);
            for (int k = 0; k < 8; k++) {
                if (!(t & pair_bit(ij, k))) continue;
                if ((t & fano::p_set(i, j, k)) != fano::p_set(i, j, k)) {
                    if (witness) *witness = {i, j, k};
                    return false;
                }
            }
        }
    return true;
}

bool is_nice(Mask t, TripleWitness* witness) {
    if (t & ~x_mask()) throw std::invalid_argument("is_nice: input has a pair outside X");
    for (int i = 1; i <= 7; i++)
        for (int j = 1; j <= 7; j++)
            for (int k = 1; k <= 7; k++) {
                if (!fano::is_generating_triplet(i, j, k)) continue;
                if ((t & pair_bit(i, j)) && (t & pair_bit(k, star(i, j))) &&
                    (t & fano::p_set(i, j, k)) != fano::p_set(i, j, k)) {
                    if (witness) *witness = {i, j, k};
                    return false;
                }
            }
    return true;
}

Mask closure(Mask t) { return close_under(gns_implications(), t); }

Mask nice_closure(Mask t) {
    if (t & ~x_mask()) throw std::invalid_argument("nice_closure: input has a pair outside X");
    return close_under(nice_implications(), t);
}

std::vector<Mask> enumerate_all_gns() {
    std::vector<int> ground(36);
    for (int i = 0; i < 36; i++) ground[i] = i;
    return lectic_enumerate(ground, &closure);
}

std::vector<Mask> enumerate_all_nice() {
    std::vector<int> ground;
    for (int p = 0; p < 36; p++)
        if (x_mask() & (Mask{1} << p)) ground.push_back(p);
    return lectic_enumerate(ground, &nice_closure);
}

Mask apply_collineation(const fano::Perm& sigma, Mask t) { return fano::apply_perm(sigma, t); }

Mask canonical_form(Mask t) {
    Mask best = ~Mask{0};
    for (const auto& sigma : fano::collineation_group()) best = std::min(best, fano::apply_perm(sigma, t));
    return best;
}

std::vector<Orbit> orbit_classify(const std::vector<Mask>& sets) {
    std::unordered_map<Mask, std::vector<Mask>> buckets;
    for (Mask t : sets) buckets[canonical_form(t)].push_back(t);
    std::vector<Orbit> out;
    out.reserve(buckets.size());
    for (auto& [canon, members] : buckets) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back({canon, std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.canon < b.canon; });
    return out;
}

// ---- named families ------------------------------------------------------

Mask named_s(int i) {
    static const std::array<std::vector<int>, 14> pairs = {{
        {},
        {12},
        {12, 13},
        {12, 67},
        {12, 13, 14},
        {12, 13, 17},
        {12, 16, 26},
        {12, 16, 67},
        {25, 36, 47},
        {12, 16, 17, 26},
        {12, 16, 27, 67},
        {12, 16, 17, 26, 27},
        {34, 36, 37, 46, 47, 67},
        {12, 23, 13, 17, 26, 35},
    }};
    if (i < 0 || i > 13) throw std::invalid_argument("named_s: index out of range");
    Mask m = 0;
    for (int p : pairs[i]) m |= pair_bit(p / 10, p % 10);
    return m;
}

Mask named_e(std::uint8_t jset) {
    Mask m = 0;
    for (int j = 1; j <= 7; j++)
        if (jset >> j & 1) m |= pair_bit(j, j);
    return m;
}

Mask named_f(std::uint8_t jset) {
    Mask m = pair_bit(0, 0);
    for (int j = 1; j <= 7; j++)
        if (jset >> j & 1) m |= pair_bit(0, j);
    return m;
}

Mask named_p0jj(int j) {
    if (j < 1 || j > 7) throw std::invalid_argument("named_p0jj: j out of range");
    return pair_bit(0, 0) | pair_bit(0, j) | pair_bit(j, j);
}

Mask named_y(int card) {
    switch (card) {
        case 7:
            return parse("00 01 02 05 11 12 15");
        case 10:
            return parse("00 01 02 05 11 12 15 22 25 55");
        case 11:
            return parse("00 01 02 03 05 06 11 12 13 15 16");
        case 15: {
            Mask m = pair_bit(0, 0);
            for (int i = 1; i <= 7; i++) m |= pair_bit(0, i) | pair_bit(1, i);
            return m;
        }
        case 19:
            return named_y(15) | pair_bit(2, 3) | pair_bit(3, 5) | pair_bit(2, 6) | pair_bit(5, 6);
        case 26: {
            Mask drop = 0;
            for (int k : {3, 4, 6, 7})
                for (int l : {3, 4, 6, 7}) drop |= pair_bit(k, l);
            return kX0 & ~drop;
        }
        default:
            throw std::invalid_argument("named_y: unknown cardinality");
    }
}

namespace {

std::uint8_t parse_jset(const std::string& s) {
    if (s == "I") return 0xFE;
    std::uint8_t jset = 0;
    for (char ch : s) {
        if (ch < '1' || ch > '7') throw std::invalid_argument("bad index subset: " + s);
        jset |= static_cast<std::uint8_t>(1u << (ch - '0'));
    }
    return jset;
}

Mask parse_token(const std::string& tok) {
    auto tail = [&](size_t from) {
        std::string t = tok.substr(from);
        if (!t.empty() && t[0] == '_') t = t.substr(1);
        return t;
    };
    if (tok == "X0") return kX0;
    if (tok.size() >= 2 && tok[0] == 'Y') return named_y(std::stoi(tail(1)));
    if (tok[0] == 'S') return named_s(std::stoi(tail(1)));
    if (tok[0] == 'E') {
        std::string j = tok.substr(1);
        if (!j.empty() && j[0] == '_') j = j.substr(1);
        return named_e(parse_jset(j));
    }
    if (tok[0] == 'F') {
        std::string j = tok.substr(1);
        if (!j.empty() && j[0] == '_') j = j.substr(1);
        return named_f(parse_jset(j));
    }
    if (tok[0] == 'P') {
        std::string d = tok.substr(1);
        if (!d.empty() && d[0] == '_') d = d.substr(1);
        if (d.size() == 3 && d[0] == '0' && d[1] == d[2]) return named_p0jj(d[1] - '0');
        throw std::invalid_argument("bad P-set token (expected P0jj): " + tok);
    }
    // bare pair "ij"
    if (tok.size() == 2 && std::isdigit(tok[0]) && std::isdigit(tok[1])) {
        int i = tok[0] - '0', j = tok[1] - '0';
        if (i > 7 || j > 7 || i > j) throw std::invalid_argument("bad pair (need i<=j in 0..7): " + tok);
        return pair_bit(i, j);
    }
    throw std::invalid_argument("unknown notation token: " + tok);
}

}  // namespace

Mask parse(const std::string& text) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ',' || c == '+') c = ' ';
    std::istringstream in(norm);
    Mask m = 0;
    std::string tok;
    bool any = false;
    while (in >> tok) {
        m |= parse_token(tok);
        any = true;
    }
    if (!any) throw std::invalid_argument("empty generalised-nice-set notation");
    return m;
}

std::string format_pairs(Mask t) {
    std::string out;
    for (int p = 0; p < 36; p++) {
        if (!(t >> p & 1)) continue;
        auto [i, j] = pair_unindex(p);
        if (!out.empty()) out += ' ';
        out += static_cast<char>('0' + i);
        out += static_cast<char>('0' + j);
    }
    if (out.empty()) out = "-";
    return out;
}

SupportStats support_stats(Mask t) {
    SupportStats st;
    Mask tx = t & x_mask();
    for (int i = 1; i <= 7; i++)
        for (int j = i + 1; j <= 7; j++)
            if (tx & pair_bit(i, j)) {
                st.k_set |= static_cast<std::uint8_t>(1u << i | 1u << j);
                st.jstar_set |= static_cast<std::uint8_t>(1u << star(i, j));
            }
    for (int i = 0; i <= 7; i++)
        for (int j = 1; j <= 7; j++)
            if (t & pair_bit(i, j)) st.n[i]++;
    return st;
}

// ---- classification data -------------------------------------------------

namespace {

NamedGns make_named(const std::string& name) {
    NamedGns g;
    g.name = name;
    g.mask = parse(name);
    if (name == "X0") {
        g.kind = NamedGns::Kind::X0Full;
        return g;
    }
    if (name[0] == 'Y') {
        g.kind = NamedGns::Kind::Y;
        g.y = std::stoi(name.substr(1));
        return g;
    }
    // decompose "S<i>+<tail>" / "<tail>"
    std::string tail = name;
    if (name[0] == 'S') {
        auto plus = name.find('+');
        g.s = std::stoi(name.substr(1, plus == std::string::npos ? std::string::npos : plus - 1));
        tail = plus == std::string::npos ? "" : name.substr(plus + 1);
    }
    if (tail.empty()) {
        g.kind = NamedGns::Kind::SPlusE;  // S_i alone (J empty)
        return g;
    }
    if (tail[0] == 'E') {
        g.kind = NamedGns::Kind::SPlusE;
        std::string j = tail.substr(1);
        if (!j.empty() && j[0] == '_') j = j.substr(1);
        g.jset = parse_jset(j);
        return g;
    }
    if (tail[0] == 'F') {
        g.kind = NamedGns::Kind::SPlusF;
        std::string j = tail.substr(1);
        if (!j.empty() && j[0] == '_') j = j.substr(1);
        g.jset = parse_jset(j);
        return g;
    }
    if (tail[0] == 'P') {
        g.kind = NamedGns::Kind::SPlusP;
        g.pj = tail[2] - '0';  // "P0jj"
        return g;
    }
    throw std::invalid_argument("unrecognized classified name: " + name);
}

std::vector<NamedGns> build_list(const std::vector<std::string>& names) {
    std::vector<NamedGns> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(make_named(n));
    return out;
}

// J subsets per S index for the S_i + E_J families (the 245-set list).
const std::vector<std::pair<int, std::vector<std::string>>> kSE245 = {
    {1, {"", "1", "3", "12", "13", "34", "36", "123", "134", "346", "136", "1234", "3467", "1236", "1367", "12346", "13467", "123467"}},
    {2, {"", "1", "2", "4", "7", "12", "14", "17", "23", "24", "27", "47", "123", "124", "127", "234", "247", "147", "237", "1234", "1237", "1247", "2347", "12347"}},
    {3, {"", "1", "3", "12", "13", "16", "34", "123", "126", "134", "137", "136", "1234", "1267", "1236", "1346", "12346", "12367", "123467"}},
    {4, {"", "1", "2", "12", "23", "123", "234", "1234"}},
    {5, {"", "1", "2", "12", "23", "123", "237", "1237"}},
    {6, {"", "1", "7", "12", "17", "126", "127", "1267"}},
    {7, {"", "1", "2", "4", "12", "14", "16", "17", "24", "27", "124", "126", "127", "146", "247", "147", "1267", "1246", "1247", "12467"}},
    {8, {"", "2", "23", "25", "234", "235", "237", "2356", "2345", "23456", "234567"}},
    {9, {"", "1", "2", "7", "12", "17", "26", "27", "126", "127", "267", "1267"}},
    {10, {"", "1", "4", "12", "14", "17", "124", "126", "147", "1267", "1246", "12467"}},
    {11, {"", "1", "6", "12", "16", "67", "126", "167", "1267"}},
    {12, {"", "3", "34", "346", "3467"}},
    {13, {"", "1", "12", "123"}},
};

const std::vector<std::pair<int, std::vector<std::string>>> kSF245 = {
    {1, {"", "3", "34", "37", "125", "347", "3467", "1235", "12567", "12356", "123456", "I"}},
    {2, {"", "4", "7", "47", "12356", "123456", "123567", "I"}},
    {3, {"", "3", "34", "12567", "123567", "I"}},
    {4, {"", "I"}},
    {5, {"", "I"}},
    {6, {"", "7", "123456", "I"}},
    {7, {"", "4", "123567", "I"}},
    {8, {"", "I"}},
    {9, {"", "I"}},
    {10, {"", "4", "123567", "I"}},
    {11, {"", "I"}},
    {12, {"", "I"}},
    {13, {"", "I"}},
};

// Same data with the 30 merged entries removed (the representative list).
const std::vector<std::pair<int, std::vector<std::string>>> kSE215 = {
    {1, {"", "1", "3", "12", "13", "34", "123", "134", "346", "1234", "3467", "1367", "12346", "13467", "123467"}},
    {2, {"", "1", "2", "4", "12", "14", "23", "24", "47", "123", "124", "234", "247", "147", "1234", "1247", "2347", "12347"}},
    {3, {"", "1", "3", "12", "13", "16", "34", "123", "126", "134", "136", "1234", "1267", "1236", "1346", "12346", "12367", "123467"}},
    {4, {"", "1", "2", "12", "23", "123", "234", "1234"}},
    {6, {"", "1", "7", "12", "17", "126", "127", "1267"}},
    {7, {"", "1", "2", "4", "12", "14", "16", "17", "24", "27", "124", "126", "127", "146", "247", "147", "1267", "1246", "1247", "12467"}},
    {8, {"", "2", "23", "25", "234", "235", "2356", "2345", "23456", "234567"}},
    {9, {"", "1", "2", "7", "12", "17", "26", "27", "126", "127", "267", "1267"}},
    {10, {"", "1", "4", "12", "14", "17", "124", "126", "147", "1267", "1246", "12467"}},
    {11, {"", "1", "6", "12", "16", "67", "126", "167", "1267"}},
    {12, {"", "3", "34", "346", "3467"}},
    {13, {"", "1", "12", "123"}},
};

const std::vector<std::pair<int, std::vector<std::string>>> kSF215 = {
    {1, {"", "3", "34", "125", "347", "3467", "1235", "12567", "123456", "I"}},
    {2, {"", "4", "47", "12356", "123456", "I"}},
    {3, {"", "3", "34", "12567", "123567", "I"}},
    {4, {"", "I"}},
    {6, {"", "7", "123456", "I"}},
    {7, {"", "4", "123567", "I"}},
    {8, {"", "I"}},
    {9, {"", "I"}},
    {10, {"", "4", "123567", "I"}},
    {11, {"", "I"}},
    {12, {"", "I"}},
    {13, {"", "I"}},
};

std::vector<std::string> assemble_names(bool full245) {
    std::vector<std::string> names = {"Y7", "Y10", "Y11", "Y15", "Y19", "Y26", "X0"};
    if (full245) {
        for (const char* n : {"P011", "S1+P033", "S2+P044", "S2+P077", "S3+P033", "S6+P077", "S7+P044", "S10+P044"})
            names.push_back(n);
    } else {
        for (const char* n : {"P011", "S1+P033", "S2+P044", "S3+P033", "S6+P077", "S7+P044", "S10+P044"})
            names.push_back(n);
    }
    const std::vector<std::string> j3 =
        full245 ? std::vector<std::string>{"", "1", "12", "123", "125", "1234", "1235", "12345", "123456", "I"}
                : std::vector<std::string>{"", "1", "12", "123", "1234", "12345", "123456", "I"};
    for (const auto& j : j3) names.push_back("E_" + j);
    for (const auto& j : j3) names.push_back("F_" + j);
    for (const auto& [i, js] : full245 ? kSE245 : kSE215)
        for (const auto& j : js)
            names.push_back(j.empty() ? "S" + std::to_string(i) : "S" + std::to_string(i) + "+E_" + j);
    for (const auto& [i, js] : full245 ? kSF245 : kSF215)
        for (const auto& j : js) names.push_back("S" + std::to_string(i) + "+F_" + j);
    return names;
}

}  // namespace

const std::vector<NamedGns>& classified_245() {
    static const std::vector<NamedGns> list = build_list(assemble_names(true));
    return list;
}

const std::vector<NamedGns>& representatives_215() {
    static const std::vector<NamedGns> list = build_list(assemble_names(false));
    return list;
}

const NamedGns* find_named(const std::string& name) {
    for (const auto& g : classified_245())
        if (g.name == name) return &g;
    return nullptr;
}

}  // namespace gradcon::gns
