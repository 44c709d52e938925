// dtv: compute and cross-check orbifold vertices and pyramid generating functions.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dtv/fock.hpp"
#include "dtv/rpc.hpp"
#include "dtv/serialize.hpp"
#include "dtv/vertex.hpp"

using namespace dtv;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string group = "z2z2";
    int n = 4;
    std::string leg;
    std::vector<std::string> methods;
    int degree = 6;
    bool verify = false;
    std::string format = "json";
    std::string output;
    int workers = 1;
    int l = 0;
    std::string frame = "antidiagonal";
    int window = 10;
    int max_leg_size = 6;
    std::vector<std::string> files;
};

struct Result {
    std::string method;
    Series series;
};

Group parse_group(const std::string& g) {
    if (g == "z2z2") return Group::z2z2;
    if (g == "zn") return Group::zn;
    throw UsageError("group must be z2z2 or zn");
}

Partition leg_of(const Options& o) {
    try {
        return parse_partition(o.leg);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> names_for(const Options& o) { return variable_names(parse_group(o.group), o.n); }

Series vertex_series(const Options& o, const Partition& nu, const std::string& method) {
    Group g = parse_group(o.group);
    if (method == "enumerate") return enumerate_3d(nu, ColorMap{g, o.n}, o.degree);
    if (method == "transfer") return vertex_by_transfer({g, o.n, nu, TransferMode::standard, o.degree});
    if (method == "closed") {
        if (g == Group::zn) return vertex_closed_zn(o.n, Legs{{}, {}, nu}, o.degree);
        if (nu.empty()) return closed_z2z2_nolegs(o.degree);
        if (auto m = is_staircase(nu)) return one_leg_z2z2_closed(*m, o.degree);
        throw UsageError("no closed form for a non-staircase Z2xZ2 leg");
    }
    throw UsageError("unknown method '" + method + "'");
}

Series pyramid_series(const Options& o, const std::string& method) {
    if (method == "enumerate") return pyramid_generating_function(o.degree);
    if (method == "closed") return z_pyramid_closed(o.degree);
    throw UsageError("pyramid supports methods enumerate and closed");
}

Series rpc_series(const Options& o, const Partition& nu, const std::string& method) {
    Frame f = parse_frame(o.frame);
    if (method == "enumerate") return rpc_generating_function(nu, o.l, f, o.degree);
    if (method == "transfer") {
        if (o.l != 0) throw UsageError("the transfer method for restricted configurations needs --l 0");
        auto mode = f == Frame::antidiagonal ? TransferMode::rpc_antidiag : TransferMode::rpc_diag;
        return vertex_by_transfer({Group::z2z2, 4, nu, mode, o.degree});
    }
    if (method == "closed") {
        auto m = is_staircase(nu);
        if (!m && !nu.empty()) throw UsageError("no closed form for a non-staircase leg");
        return corollary_rpc_closed(m.value_or(0), o.degree);
    }
    throw UsageError("unknown method '" + method + "'");
}

json record(const std::string& vertex, const std::string& group, const Partition& leg, const Result& r,
            const std::vector<std::string>& names) {
    return json{{"vertex", vertex}, {"group", group}, {"leg", to_json(leg)}, {"method", r.method},
                {"series", to_json(r.series, names)}};
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    f << text;
}

// compares every result to the first; reports the first differing monomial
int check_agreement(const std::vector<Result>& rs, const std::vector<std::string>& names) {
    for (std::size_t t = 1; t < rs.size(); ++t) {
        Mono w{};
        if (!first_difference(rs[0].series, rs[t].series, w)) continue;
        std::cerr << "mismatch " << rs[0].method << " vs " << rs[t].method << " at " << mono_to_string(w, names)
                  << ": " << rs[0].series.coeff(w).get_str() << " vs " << rs[t].series.coeff(w).get_str() << "\n";
        return 1;
    }
    if (rs.size() > 1) std::cerr << "all " << rs.size() << " methods agree\n";
    return 0;
}

int output_results(const Options& o, const std::string& vertex, const std::string& group, const Partition& leg,
                   const std::vector<Result>& rs, const std::vector<std::string>& names) {
    std::string text;
    if (o.format == "csv") {
        for (auto& r : rs) {
            if (rs.size() > 1) text += "# " + r.method + "\n";
            text += to_csv(r.series, names);
        }
    } else {
        json out;
        if (rs.size() == 1) {
            out = record(vertex, group, leg, rs[0], names);
        } else {
            out = json::array();
            for (auto& r : rs) out.push_back(record(vertex, group, leg, r, names));
        }
        text = out.dump(2) + "\n";
    }
    emit(o, text);
    return o.verify ? check_agreement(rs, names) : 0;
}

std::string vertex_label(const Partition& nu) { return "V_{(),()," + to_string(nu) + "}"; }

int run_vertex(const Options& o) {
    Partition nu = leg_of(o);
    auto methods = o.methods.empty() ? std::vector<std::string>{"closed"} : o.methods;
    if (o.verify && methods.size() < 2) throw UsageError("--verify needs at least two methods");
    std::vector<Result> rs;
    for (auto& m : methods) rs.push_back({m, vertex_series(o, nu, m)});
    std::string group = o.group == "zn" ? "Z" + std::to_string(o.n) : "Z2xZ2";
    return output_results(o, vertex_label(nu), group, nu, rs, names_for(o));
}

int run_pyramid(const Options& o) {
    auto methods = o.methods.empty() ? std::vector<std::string>{"enumerate"} : o.methods;
    if (o.verify && methods.size() < 2) throw UsageError("--verify needs at least two methods");
    std::vector<Result> rs;
    for (auto& m : methods) rs.push_back({m, pyramid_series(o, m)});
    return output_results(o, "Z_P", "Z2xZ2", Partition{}, rs, z2z2_names());
}

int run_rpc(const Options& o) {
    Partition nu = leg_of(o);
    auto methods = o.methods.empty() ? std::vector<std::string>{"enumerate"} : o.methods;
    if (o.verify && methods.size() < 2) throw UsageError("--verify needs at least two methods");
    std::vector<Result> rs;
    for (auto& m : methods) rs.push_back({m, rpc_series(o, nu, m)});
    std::string label = std::string("Z_RPC[") + frame_name(parse_frame(o.frame)) + ",l=" + std::to_string(o.l) + "]";
    return output_results(o, label, "Z2xZ2", nu, rs, z2z2_names());
}

int run_uniqueness(const Options& o) {
    json symmetric = json::array(), staircases = json::array();
    bool agree = true;
    for (auto& nu : partitions_up_to(o.max_leg_size)) {
        bool eq = region_complement_equal(nu, o.l, o.window);
        bool st = is_staircase(nu).has_value();
        if (eq) symmetric.push_back(to_json(nu));
        if (st) staircases.push_back(to_json(nu));
        agree = agree && eq == st;
    }
    json out{{"max_leg_size", o.max_leg_size}, {"window", o.window},   {"l", o.l},
             {"symmetric", symmetric},        {"staircases", staircases}, {"exactly_staircases", agree}};
    emit(o, out.dump(2) + "\n");
    return agree ? 0 : 1;
}

Series load_series(const std::string& path, std::vector<std::string>& names) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    const json& s = j.contains("series") ? j.at("series") : j;
    names = s.at("vars").get<std::vector<std::string>>();
    return series_from_json(s);
}

int run_verify(const Options& o) {
    std::vector<Result> rs;
    std::vector<std::string> names;
    if (!o.files.empty()) {
        if (o.files.size() != 2) throw UsageError("verify compares exactly two files");
        for (auto& path : o.files) rs.push_back({path, load_series(path, names)});
        // compare on the common cutoff
        int d = std::min(rs[0].series.cutoff(), rs[1].series.cutoff());
        for (auto& r : rs) r.series = r.series.truncated(d);
        if (rs[0].series.nvars() != rs[1].series.nvars()) throw UsageError("series have different variables");
    } else {
        Partition nu = leg_of(o);
        auto methods = o.methods;
        if (methods.empty()) {
            methods = {"enumerate", "transfer"};
            bool closed = o.group == "zn" || nu.empty() || is_staircase(nu);
            if (closed) methods.insert(methods.begin(), "closed");
        }
        if (methods.size() < 2) throw UsageError("verify needs at least two methods");
        for (auto& m : methods) rs.push_back({m, vertex_series(o, nu, m)});
        names = names_for(o);
    }
    int status = check_agreement(rs, names);
    json out{{"compared", json::array()}, {"agree", status == 0}};
    for (auto& r : rs) out["compared"].push_back(r.method);
    emit(o, out.dump(2) + "\n");
    return status;
}

void validate(const Options& o) {
    if (o.degree < 0) throw UsageError("--degree must be nonnegative");
    if (o.workers < 1) throw UsageError("--workers must be positive");
    if (o.n < 1) throw UsageError("--n must be positive");
    if (o.l < 0) throw UsageError("--l must be nonnegative");
    if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
    parse_group(o.group);
    try {
        parse_frame(o.frame);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbifold DT vertices, pyramid partitions and restricted configurations"};
    app.require_subcommand(1);
    Options o;
    if (const char* w = std::getenv("DTV_WORKERS")) o.workers = std::atoi(w);

    auto common = [&](CLI::App* c) {
        c->add_option("--degree,-D", o.degree, "truncation degree")->capture_default_str();
        c->add_option("--format", o.format, "json or csv")->capture_default_str();
        c->add_option("--output,-o", o.output, "write here instead of stdout");
        c->add_option("--workers", o.workers, "worker count (default from DTV_WORKERS)")->capture_default_str();
    };
    auto vertex_opts = [&](CLI::App* c) {
        c->add_option("--group", o.group, "z2z2 or zn")->capture_default_str();
        c->add_option("--n", o.n, "order of Zn")->capture_default_str();
        c->add_option("--leg", o.leg, "leg partition, e.g. 2,1 (empty for none)");
        c->add_option("--method", o.methods, "closed, enumerate, transfer")->delimiter(',');
    };

    auto* vertex = app.add_subcommand("vertex", "one-leg vertex on the third leg");
    common(vertex);
    vertex_opts(vertex);
    vertex->add_flag("--verify", o.verify, "exit 1 unless all methods agree");

    auto* pyramid = app.add_subcommand("pyramid", "pyramid partition generating function");
    common(pyramid);
    pyramid->add_option("--method", o.methods, "enumerate, closed")->delimiter(',');
    pyramid->add_flag("--verify", o.verify, "exit 1 unless all methods agree");

    auto* rpc = app.add_subcommand("rpc", "restricted pyramid configurations");
    common(rpc);
    rpc->add_option("--leg", o.leg, "leg partition");
    rpc->add_option("--l", o.l, "shift")->capture_default_str();
    rpc->add_option("--frame", o.frame, "antidiagonal or diagonal")->capture_default_str();
    rpc->add_option("--method", o.methods, "enumerate, transfer, closed")->delimiter(',');
    rpc->add_flag("--verify", o.verify, "exit 1 unless all methods agree");

    auto* uniq = app.add_subcommand("uniqueness", "which legs have symmetric interlacing");
    common(uniq);
    uniq->add_option("--max-leg-size", o.max_leg_size, "largest |nu| scanned")->capture_default_str();
    uniq->add_option("--window", o.window, "slice window")->capture_default_str();
    uniq->add_option("--l", o.l, "shift")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "cross-check methods, or compare two result files");
    common(verify);
    vertex_opts(verify);
    verify->add_option("files", o.files, "two JSON result files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        validate(o);
        if (*vertex) return run_vertex(o);
        if (*pyramid) return run_pyramid(o);
        if (*rpc) return run_rpc(o);
        if (*uniq) return run_uniqueness(o);
        return run_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
