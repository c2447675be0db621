#include "polyfun/ringspec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polyfun/errors.hpp"

namespace polyfun {

using nlohmann::ordered_json;

FiniteRing load_ring_spec(const std::string& text, const std::string& name) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ConfigError("ring spec '" + name + "': bad JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("ring spec '" + name + "': expected a JSON object");
    for (const char* field : {"modulus", "rank", "basis", "one", "mul"})
        if (!doc.contains(field))
            throw ConfigError("ring spec '" + name + "': missing field '" + field + "'");

    u64 m;
    std::size_t r;
    std::vector<std::string> labels;
    Row one;
    std::vector<u64> tensor;
    try {
        m = doc["modulus"].get<u64>();
        r = doc["rank"].get<std::size_t>();
        labels = doc["basis"].get<std::vector<std::string>>();
        if (labels.size() != r)
            throw ConfigError("ring spec '" + name + "': basis has " + std::to_string(labels.size()) +
                              " labels, rank is " + std::to_string(r));
        auto read_tuple = [&](const ordered_json& j, const std::string& where) {
            if (!j.is_array() || j.size() != r)
                throw ConfigError("ring spec '" + name + "': " + where + " must be a length-" +
                                  std::to_string(r) + " tuple");
            Row row(r);
            for (std::size_t k = 0; k < r; ++k) row[k] = reduce_signed(j[k].get<i64>(), m < 2 ? 2 : m);
            return row;
        };
        one = read_tuple(doc["one"], "one");
        const ordered_json& mul = doc["mul"];
        if (!mul.is_array() || mul.size() != r)
            throw ConfigError("ring spec '" + name + "': mul must be an r x r array of tuples");
        tensor.assign(r * r * r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            if (!mul[i].is_array() || mul[i].size() != r)
                throw ConfigError("ring spec '" + name + "': mul[" + std::to_string(i) +
                                  "] must have length " + std::to_string(r));
            for (std::size_t j = 0; j < r; ++j) {
                Row row = read_tuple(mul[i][j], "mul[" + std::to_string(i) + "][" + std::to_string(j) + "]");
                std::copy(row.begin(), row.end(), tensor.begin() + static_cast<std::ptrdiff_t>((i * r + j) * r));
            }
        }
    } catch (const ordered_json::exception& e) {
        throw ConfigError("ring spec '" + name + "': " + e.what());
    }
    return FiniteRing::from_table(name, m, std::move(labels), std::move(one), std::move(tensor));
}

FiniteRing load_ring_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open ring spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string stem = path;
    if (auto pos = stem.find_last_of('/'); pos != std::string::npos) stem = stem.substr(pos + 1);
    if (auto pos = stem.rfind(".json"); pos != std::string::npos && pos + 5 == stem.size())
        stem = stem.substr(0, pos);
    return load_ring_spec(ss.str(), stem);
}

std::string emit_ring_spec(const FiniteRing& ring) {
    const std::size_t r = ring.rank();
    ordered_json doc;
    doc["modulus"] = ring.modulus();
    doc["rank"] = r;
    doc["basis"] = ring.labels();
    doc["one"] = ring.one().coords();
    ordered_json mul = ordered_json::array();
    for (std::size_t i = 0; i < r; ++i) {
        ordered_json rowi = ordered_json::array();
        for (std::size_t j = 0; j < r; ++j)
            rowi.push_back((ring.basis_element(i) * ring.basis_element(j)).coords());
        mul.push_back(std::move(rowi));
    }
    doc["mul"] = std::move(mul);
    return doc.dump();
}

namespace {

FiniteRing make_f2s3() {
    // Group ring F2[S3]; basis indexed by the six permutations, products by
    // composition. Permutations of {0,1,2} in one-line notation.
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int t = 0; t < 6; ++t)
            if (perms[t][0] == p[0] && perms[t][1] == p[1] && perms[t][2] == p[2]) return t;
        return -1;
    };
    std::vector<std::string> labels = {"e", "c3", "c3sq", "s01", "s12", "s02"};
    std::vector<u64> tensor(6 * 6 * 6, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int t = 0; t < 3; ++t) comp[t] = perms[i][perms[j][t]];
            tensor[(static_cast<std::size_t>(i) * 6 + j) * 6 + static_cast<std::size_t>(index_of(comp))] = 1;
        }
    Row one(6, 0);
    one[0] = 1;
    return FiniteRing::from_table("f2s3", 2, std::move(labels), std::move(one), std::move(tensor));
}

FiniteRing make_z9eps() {
    // Z/9[t]/(t^2): rank 2, t*t = 0.
    std::vector<std::string> labels = {"1", "t"};
    std::vector<u64> tensor(8, 0);
    auto set = [&](int i, int j, int k, u64 v) { tensor[(static_cast<std::size_t>(i) * 2 + j) * 2 + k] = v; };
    set(0, 0, 0, 1); // 1*1 = 1
    set(0, 1, 1, 1); // 1*t = t
    set(1, 0, 1, 1); // t*1 = t
    return FiniteRing::from_table("z9eps", 9, std::move(labels), {1, 0}, std::move(tensor));
}

FiniteRing make_z4i() {
    // Z/4[i]/(i^2 + 1): rank 2, i*i = -1 = 3.
    std::vector<std::string> labels = {"1", "i"};
    std::vector<u64> tensor(8, 0);
    auto set = [&](int i, int j, int k, u64 v) { tensor[(static_cast<std::size_t>(i) * 2 + j) * 2 + k] = v; };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, 3);
    return FiniteRing::from_table("z4i", 4, std::move(labels), {1, 0}, std::move(tensor));
}

} // namespace

std::vector<std::string> builtin_table_ring_names() { return {"f2s3", "z9eps", "z4i"}; }

FiniteRing builtin_table_ring(const std::string& name) {
    if (name == "f2s3") return make_f2s3();
    if (name == "z9eps") return make_z9eps();
    if (name == "z4i") return make_z4i();
    throw ConfigError("unknown table ring: " + name);
}

FiniteRing ring_by_name(const std::string& name, const Caps& caps) {
    if (!name.empty() && name[0] == '@') return load_ring_spec_file(name.substr(1));
    for (const auto& t : builtin_table_ring_names())
        if (name == t) return builtin_table_ring(name);
    auto parse_num = [&](std::size_t from, std::size_t to) -> u64 {
        if (from >= to) throw ConfigError("unknown ring name: " + name);
        u64 v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (name[i] < '0' || name[i] > '9') throw ConfigError("unknown ring name: " + name);
            v = v * 10 + static_cast<u64>(name[i] - '0');
        }
        return v;
    };
    if (name.size() >= 2 && name[0] == 'z')
        return FiniteRing::matrix_ring(1, parse_num(1, name.size()), caps);
    if (name.size() >= 4 && (name[0] == 'm' || name[0] == 't')) {
        std::size_t zpos = name.find('z', 1);
        if (zpos != std::string::npos) {
            u64 n = parse_num(1, zpos);
            u64 m = parse_num(zpos + 1, name.size());
            if (n < 1 || n > 255) throw ConfigError("unknown ring name: " + name);
            return name[0] == 'm'
                       ? FiniteRing::matrix_ring(static_cast<unsigned>(n), m, caps)
                       : FiniteRing::triangular_ring(static_cast<unsigned>(n), m, caps);
        }
    }
    throw ConfigError("unknown ring name: " + name);
}

namespace {

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip_ws(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

RingElement parse_element(const FiniteRing& ring, const std::string& text) {
    std::string t = strip_ws(text);
    if (t.empty()) throw ConfigError("empty element expression");
    if (t[0] == '[') {
        // coordinate tuple
        if (t.back() != ']') throw ConfigError("unterminated coordinate tuple: " + text);
        Row coords;
        for (const auto& part : split_top_level(t.substr(1, t.size() - 2), ',')) {
            std::string p = strip_ws(part);
            if (!is_integer_token(p)) throw ConfigError("bad coordinate '" + p + "' in " + text);
            coords.push_back(reduce_signed(std::stoll(p), ring.modulus()));
        }
        if (coords.size() != ring.rank())
            throw ConfigError("coordinate tuple length " + std::to_string(coords.size()) +
                              " does not match rank " + std::to_string(ring.rank()));
        return ring.element(std::move(coords));
    }
    RingElement acc = ring.zero();
    // terms separated by + or binary -
    std::vector<std::pair<std::string, int>> terms;
    std::string cur;
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        if ((ch == '+' || ch == '-') && i > 0) {
            terms.emplace_back(strip_ws(cur), sign);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
        } else if (ch == '-' && i == 0) {
            sign = -1;
        } else {
            cur += ch;
        }
    }
    terms.emplace_back(strip_ws(cur), sign);
    const auto& labels = ring.labels();
    for (auto& [term, sgn] : terms) {
        if (term.empty()) throw ConfigError("empty term in element expression: " + text);
        i64 coeff = 1;
        std::string label = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            std::string c = strip_ws(term.substr(0, star));
            if (!is_integer_token(c)) throw ConfigError("bad coefficient '" + c + "' in " + text);
            coeff = std::stoll(c);
            label = strip_ws(term.substr(star + 1));
        }
        RingElement base = ring.zero();
        if (is_integer_token(label)) {
            base = ring.from_int(std::stoll(label));
        } else {
            auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end())
                throw ConfigError("unknown basis label '" + label + "' for ring '" + ring.name() + "'");
            base = ring.basis_element(static_cast<std::size_t>(it - labels.begin()));
        }
        acc = acc + base.scaled(reduce_signed(coeff * sgn, ring.modulus()));
    }
    return acc;
}

SubsetSpec parse_subset(const FiniteRing& ring, const std::string& text) {
    std::string t = strip_ws(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ConfigError("subset must be a bracketed list: " + text);
    std::string inner = strip_ws(t.substr(1, t.size() - 2));
    std::vector<RingElement> elems;
    if (!inner.empty())
        for (const auto& part : split_top_level(inner, ','))
            elems.push_back(parse_element(ring, part));
    return SubsetSpec(ring, std::move(elems));
}

} // namespace polyfun
