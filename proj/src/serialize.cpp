#include "dtv/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace dtv {

std::vector<std::string> variable_names(Group g, int n) {
    if (g == Group::z2z2) return z2z2_names();
    std::vector<std::string> v;
    for (int k = 0; k < n; ++k) v.push_back("q" + std::to_string(k));
    return v;
}

json to_json(const Partition& p) { return json(p.rows()); }

Partition partition_from_json(const json& j) {
    auto rows = j.get<std::vector<int>>();
    if (!is_valid_rows(rows)) throw std::invalid_argument("not a partition");
    return Partition(rows);
}

json to_json(const Series& s, const std::vector<std::string>& names) {
    if (int(names.size()) != s.nvars()) throw std::invalid_argument("variable name count mismatch");
    json terms = json::array();
    for (auto& [m, c] : s.terms()) {
        std::vector<int> e(m.begin(), m.begin() + s.nvars());
        terms.push_back(json{{"exp", e}, {"coef", c.get_str()}});
    }
    return json{{"cutoff", s.cutoff()}, {"vars", names}, {"terms", terms}};
}

Series series_from_json(const json& j) {
    auto names = j.at("vars").get<std::vector<std::string>>();
    Series s(int(names.size()), j.at("cutoff").get<int>());
    for (auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != names.size()) throw std::invalid_argument("exponent length mismatch");
        Mono m{};
        for (std::size_t v = 0; v < e.size(); ++v) m[v] = int16_t(e[v]);
        s.add_term(m, mpz_class(t.at("coef").get<std::string>()));
    }
    return s;
}

std::string to_csv(const Series& s, const std::vector<std::string>& names) {
    std::ostringstream out;
    for (auto& n : names) out << n << ',';
    out << "coef\n";
    for (auto& [m, c] : s.terms()) {
        for (int v = 0; v < s.nvars(); ++v) out << m[v] << ',';
        out << c.get_str() << '\n';
    }
    return out.str();
}

json to_json(const PyramidPartition& p) {
    json slices = json::object();
    for (auto& [k, part] : p.slices()) slices[std::to_string(k)] = to_json(part);
    return json{{"slices", slices}};
}

PyramidPartition pyramid_from_json(const json& j) {
    SliceMap m;
    for (auto& [k, v] : j.at("slices").items()) {
        Partition p = partition_from_json(v);
        if (!p.empty()) m[std::stoi(k)] = p;
    }
    return PyramidPartition(m);
}

const char* frame_name(Frame f) { return f == Frame::diagonal ? "diagonal" : "antidiagonal"; }

Frame parse_frame(const std::string& s) {
    if (s == "diagonal") return Frame::diagonal;
    if (s == "antidiagonal") return Frame::antidiagonal;
    throw std::invalid_argument("frame must be diagonal or antidiagonal");
}

json to_json(const RestrictedConfig& c) {
    json slices = json::object();
    for (auto& [k, part] : c.slices) slices[std::to_string(k)] = to_json(part);
    return json{{"slices", slices}, {"leg", to_json(c.leg)}, {"shift", c.shift}, {"frame", frame_name(c.frame)}};
}

}  // namespace dtv
