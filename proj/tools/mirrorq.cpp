#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mirrorq/frobenius.hpp"
#include "mirrorq/group.hpp"
#include "mirrorq/periods.hpp"
#include "mirrorq/recursion.hpp"
#include "mirrorq/serialize.hpp"
#include "mirrorq/verify.hpp"
#include "mirrorq/yukawa.hpp"

namespace fs = std::filesystem;
using mirrorq::json;
using mirrorq::Rational;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
    std::string format = "json";
    std::string out;
    bool no_meta = false;
    std::string cache_dir;
};

void add_output_options(CLI::App* cmd, OutputOptions& oo, bool with_csv = true) {
    cmd->add_option("--format", oo.format, "Output format")
        ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"json", "csv"}
                                       : std::vector<std::string>{"json"}));
    cmd->add_option("--out", oo.out, "Write output to a file instead of stdout");
    cmd->add_flag("--no-meta", oo.no_meta, "Omit the generator/timestamp metadata block");
    cmd->add_option("--cache-dir", oo.cache_dir,
                    "Series cache directory (or set MIRRORQ_CACHE_DIR)");
}

std::string cache_directory(const OutputOptions& oo) {
    if (!oo.cache_dir.empty()) return oo.cache_dir;
    if (const char* env = std::getenv("MIRRORQ_CACHE_DIR")) return env;
    return {};
}

void attach_meta(json& j, const OutputOptions& oo) {
    if (oo.no_meta) return;
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    j["meta"] = json{{"generator", std::string("mirrorq ") + kVersion}, {"utc", buf}};
}

void emit(std::string payload, const OutputOptions& oo) {
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (oo.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(oo.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + oo.out);
        f << payload;
    }
}

// On-disk cache entry: {"checksum": fnv1a(payload-dump), "payload": ...}
json cache_load(const std::string& dir, const std::string& key) {
    fs::path p = fs::path(dir) / (key + ".json");
    std::ifstream f(p);
    if (!f) return json();
    json wrapper;
    try {
        f >> wrapper;
        std::string sum = wrapper.at("checksum").get<std::string>();
        std::string payload = wrapper.at("payload").dump();
        if (mirrorq::fnv1a_hex(payload) != sum) return json();
        return wrapper["payload"];
    } catch (...) {
        return json();
    }
}

void cache_store(const std::string& dir, const std::string& key, const json& payload) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path p = fs::path(dir) / (key + ".json");
    json wrapper{{"checksum", mirrorq::fnv1a_hex(payload.dump())}, {"payload", payload}};
    std::ofstream f(p, std::ios::binary);
    if (f) f << wrapper.dump();
}

json series_vector_to_json(const mirrorq::SeriesVector& sv) {
    json arr = json::array();
    for (int i = 0; i < 7; ++i) arr.push_back(mirrorq::series_to_json(sv.h[i]));
    json j{{"order", sv.order}, {"h", arr}};
    if (sv.derived) {
        json der = json::array();
        for (int i = 0; i < 3; ++i) der.push_back(mirrorq::series_to_json((*sv.derived)[i]));
        j["derived"] = der;
    }
    return j;
}

mirrorq::SeriesVector series_vector_from_json(const json& j) {
    mirrorq::SeriesVector sv(j.at("order").get<int>());
    for (int i = 0; i < 7; ++i) sv.h[i] = mirrorq::series_from_json(j.at("h")[i]);
    if (j.contains("derived")) {
        std::array<mirrorq::TruncSeries<>, 3> d{
            mirrorq::series_from_json(j["derived"][0]), mirrorq::series_from_json(j["derived"][1]),
            mirrorq::series_from_json(j["derived"][2])};
        sv.derived = d;
    }
    return sv;
}

mirrorq::SeriesVector expand_with_cache(int order, const OutputOptions& oo) {
    std::string dir = cache_directory(oo);
    std::string key = "expand-n" + std::to_string(order);
    if (!dir.empty()) {
        json hit = cache_load(dir, key);
        if (!hit.is_null()) return series_vector_from_json(hit);
    }
    mirrorq::SeriesVector sv = mirrorq::with_derived(mirrorq::expand(order));
    if (!dir.empty()) cache_store(dir, key, series_vector_to_json(sv));
    return sv;
}

int cmd_expand(int order, bool scaled, const OutputOptions& oo) {
    mirrorq::SeriesVector sv = expand_with_cache(order, oo);
    const auto& scalings = mirrorq::table_row_scalings();
    auto row = [&](int i) -> const mirrorq::TruncSeries<>& {
        return i < 7 ? sv.h[i] : (*sv.derived)[i - 7];
    };
    if (oo.format == "csv") {
        std::ostringstream os;
        os << "series";
        for (int n = 0; n <= order; ++n) os << ",q^" << n;
        os << "\n";
        for (int i = 0; i < 10; ++i) {
            os << (scaled ? scalings[i].label : ("h" + std::to_string(i)));
            for (int n = 0; n <= order; ++n) {
                Rational v = row(i)[n];
                if (scaled) v = scalings[i].factor * v;
                os << "," << v.str();
            }
            os << "\n";
        }
        emit(os.str(), oo);
        return 0;
    }
    json j;
    j["order"] = order;
    j["scaled_like_paper"] = scaled;
    json series = json::array();
    for (int i = 0; i < 10; ++i) {
        mirrorq::TruncSeries<> s = row(i);
        if (scaled) s = scalings[i].factor * s;
        json sj = mirrorq::series_to_json(s);
        sj["name"] = scaled ? scalings[i].label : ("h" + std::to_string(i));
        series.push_back(sj);
    }
    j["series"] = series;
    attach_meta(j, oo);
    emit(j.dump(2), oo);
    return 0;
}

int cmd_instantons(int max_degree, const OutputOptions& oo) {
    int order = std::max(max_degree, 30);
    mirrorq::FrobeniusBasis fb = mirrorq::frobenius_components(order);
    mirrorq::MirrorMap mm = mirrorq::mirror_map(fb);
    mirrorq::TruncSeries<> lambert = mirrorq::lambert_from_periods(fb, mm);
    std::vector<mpz_class> nd = mirrorq::extract_instantons(lambert, max_degree);
    mirrorq::SeriesVector sv = mirrorq::expand(order);
    mirrorq::KappaResult kr =
        mirrorq::reconcile_normalization(mirrorq::yukawa_bracket(sv), lambert);
    json nj;
    for (int d = 1; d <= max_degree; ++d) nj[std::to_string(d)] = nd[d].get_str();
    json j{{"n", nj}, {"kappa", kr.kappa.str()}, {"kappa_proportional", kr.proportional}};
    attach_meta(j, oo);
    emit(j.dump(2), oo);
    return kr.proportional ? 0 : 1;
}

int cmd_mirror_map(int order, const OutputOptions& oo) {
    mirrorq::MirrorMap mm = mirrorq::mirror_map(order);
    json j{{"q_of_z", mirrorq::series_to_json(mm.q_of_z)},
           {"z_of_q", mirrorq::series_to_json(mm.z_of_q)}};
    attach_meta(j, oo);
    emit(j.dump(2), oo);
    return 0;
}

json matrix_to_json(const mirrorq::Mat4c& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json r = json::array();
        for (int j = 0; j < 4; ++j) r.push_back(mirrorq::complex_to_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

int cmd_periods(const std::string& z0str, long prec, int order, bool include_raw,
                const OutputOptions& oo) {
    Rational z0(z0str);
    mirrorq::PeriodMatrix pm = mirrorq::assemble_period_matrix(z0, prec, order);
    auto qr = mirrorq::quadratic_relations_residual(pm.m);
    json j;
    j["z0"] = pm.z0.str();
    j["prec_bits"] = (long)pm.prec_bits;
    j["series_order"] = pm.series_order;
    j["tail_bound"] = pm.tail_bound;
    j["matrix"] = matrix_to_json(pm.m);
    if (include_raw) j["raw"] = matrix_to_json(pm.raw);
    json res = json::array();
    for (const auto& f : qr.f) res.push_back(abs(f).str(8));
    j["quadratic_residuals"] = res;
    j["det"] = mirrorq::complex_to_json(qr.det);
    attach_meta(j, oo);
    emit(j.dump(2), oo);
    return 0;
}

int cmd_verify(std::vector<std::string> suites, const mirrorq::VerifyConfig& cfg,
               const OutputOptions& oo) {
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
        suites = mirrorq::verify_suite_names();
    json out = json::array();
    bool all_ok = true;
    for (const auto& name : suites) {
        mirrorq::CheckReport rep = mirrorq::run_suite(name, cfg);
        all_ok = all_ok && rep.all_pass();
        out.push_back(mirrorq::report_to_json(rep));
    }
    json j{{"reports", out}, {"pass", all_ok}};
    attach_meta(j, oo);
    emit(j.dump(2), oo);
    return all_ok ? 0 : 1;
}

std::array<Rational, 6> parse_tuple6(const std::string& s) {
    std::array<Rational, 6> c;
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 6) throw std::invalid_argument("expected 6 comma-separated rationals");
        c[i++] = Rational(tok);
    }
    if (i != 6) throw std::invalid_argument("expected 6 comma-separated rationals");
    return c;
}

std::array<Rational, 7> parse_tuple7(const std::string& s) {
    std::array<Rational, 7> c;
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 7) throw std::invalid_argument("expected 7 comma-separated rationals");
        c[i++] = Rational(tok);
    }
    if (i != 7) throw std::invalid_argument("expected 7 comma-separated rationals");
    return c;
}

json coords_json(const mirrorq::GroupElement<Rational>& g) {
    json arr = json::array();
    for (int i = 0; i < 6; ++i) arr.push_back(g[i].str());
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-expansions, instanton numbers and verification suites for the "
                 "modular-type functions of the mirror quintic family"};
    app.require_subcommand(1);

    // expand
    int ex_order = 30;
    bool ex_scaled = false;
    OutputOptions ex_oo;
    auto* ex = app.add_subcommand("expand", "q-expansions h0..h9 by the differential recursion");
    ex->add_option("--order", ex_order, "Truncation order")->check(CLI::Range(1, 100000));
    ex->add_flag("--scaled-like-paper", ex_scaled, "Apply the printed row scalings");
    add_output_options(ex, ex_oo);

    // instantons
    int in_deg = 10;
    OutputOptions in_oo;
    auto* in = app.add_subcommand("instantons", "Instanton numbers from the Yukawa coupling");
    in->add_option("--max-degree", in_deg, "Largest degree to extract")->check(CLI::Range(1, 1000));
    add_output_options(in, in_oo, false);

    // mirror-map
    int mmorder = 30;
    OutputOptions mm_oo;
    auto* mmc = app.add_subcommand("mirror-map", "The mirror map and its inverse");
    mmc->add_option("--order", mmorder, "Truncation order")->check(CLI::Range(2, 100000));
    add_output_options(mmc, mm_oo, false);

    // periods
    std::string pz0 = "1/10";
    long pprec = 256;
    int porder = 0;
    bool praw = false;
    OutputOptions p_oo;
    auto* pc = app.add_subcommand("periods", "Numeric period matrix at a sample point");
    pc->add_option("--ztilde", pz0,
                   "Sample point in (0,1), unit-scaled coordinate (singular fiber at 1); "
                   "series evaluate at this value / 5^5");
    pc->add_option("--prec", pprec, "Working precision in bits")->check(CLI::Range(64L, 1000000L));
    pc->add_option("--order", porder, "Series order (0 = automatic)");
    pc->add_flag("--raw", praw, "Include the raw derivative-column matrix");
    add_output_options(pc, p_oo, false);

    // verify
    std::vector<std::string> vsuites;
    mirrorq::VerifyConfig vcfg;
    long vprec = 256;
    std::string vz0 = "1/10";
    OutputOptions v_oo;
    auto* vc = app.add_subcommand("verify", "Run verification suites");
    vc->add_option("--suite", vsuites, "Suite name(s), or 'all'")->delimiter(',');
    vc->add_option("--order", vcfg.order, "Series order for the series suites")
        ->check(CLI::Range(2, 100000));
    vc->add_option("--prec", vprec, "Precision in bits for the numeric suites")
        ->check(CLI::Range(64L, 1000000L));
    vc->add_option("--ztilde", vz0, "Sample point (unit-scaled coordinate)");
    vc->add_option("--samples", vcfg.samples, "Random samples in the exact group suites")
        ->check(CLI::Range(1, 100000));
    add_output_options(vc, v_oo, false);

    // group
    auto* gc = app.add_subcommand("group", "Borel-group arithmetic on six-factor coordinates");
    std::string ga, gb, gt;
    auto* gmulc = gc->add_subcommand("mul", "Product of two elements");
    gmulc->add_option("--a", ga, "g1,g2,g3,g4,g5,g6")->required();
    gmulc->add_option("--b", gb, "g1,g2,g3,g4,g5,g6")->required();
    auto* ginvc = gc->add_subcommand("inv", "Inverse of an element");
    ginvc->add_option("--a", ga, "g1,g2,g3,g4,g5,g6")->required();
    auto* gactc = gc->add_subcommand("act", "Right action on a 7-tuple t0..t6");
    gactc->add_option("--t", gt, "t0,...,t6")->required();
    gactc->add_option("--a", ga, "g1,g2,g3,g4,g5,g6")->required();
    gc->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ex) return cmd_expand(ex_order, ex_scaled, ex_oo);
        if (*in) return cmd_instantons(in_deg, in_oo);
        if (*mmc) return cmd_mirror_map(mmorder, mm_oo);
        if (*pc) return cmd_periods(pz0, pprec, porder, praw, p_oo);
        if (*vc) {
            vcfg.prec = vprec;
            vcfg.z0 = Rational(vz0);
            return cmd_verify(vsuites, vcfg, v_oo);
        }
        if (*gc) {
            json j;
            if (*gmulc) {
                mirrorq::GroupElement<Rational> r =
                    g_mul(mirrorq::GroupElement<Rational>(parse_tuple6(ga)),
                          mirrorq::GroupElement<Rational>(parse_tuple6(gb)));
                j["result"] = coords_json(r);
            } else if (*ginvc) {
                j["result"] = coords_json(g_inv(mirrorq::GroupElement<Rational>(parse_tuple6(ga))));
            } else if (*gactc) {
                auto t = action_on_t(parse_tuple7(gt),
                                     mirrorq::GroupElement<Rational>(parse_tuple6(ga)));
                json arr = json::array();
                for (const auto& v : t) arr.push_back(v.str());
                j["result"] = arr;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        // mathematically invalid inputs (sample point, degenerate tuples)
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
