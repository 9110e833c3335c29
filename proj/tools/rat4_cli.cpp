#include "rat4/areafeas.hpp"
#include "rat4/config_search.hpp"
#include "rat4/gindex.hpp"
#include "rat4/report.hpp"
#include "rat4/scenario.hpp"
#include "rat4/sphere_enum.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef RAT4_FIXTURE_DIR
#define RAT4_FIXTURE_DIR "fixtures"
#endif

using namespace rat4;
namespace fs = std::filesystem;

namespace {

struct Output {
    bool as_json = false;
    std::string path;

    void emit(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << s;
    }
    // JSON mode dumps j; text mode uses the given text, or key: value lines of j.
    void emit(const json& j, const std::string& text = {}) const {
        if (as_json) return emit(j.dump(2) + "\n");
        if (!text.empty()) return emit(text);
        std::ostringstream os;
        for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        emit(os.str());
    }
};

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string find_scenario(const std::string& name) {
    for (const fs::path& p : {fs::path(name), fs::path(RAT4_FIXTURE_DIR) / "scenarios" / name})
        if (fs::exists(p)) return p.string();
    throw std::invalid_argument("scenario not found: " + name);
}

struct ProfileArgs {
    std::string file, inline_json;

    void add(CLI::App* c) {
        auto* f = c->add_option("--profile", file, "fixed-point profile (JSON file)");
        auto* i = c->add_option("--profile-json", inline_json, "fixed-point profile (inline JSON)");
        f->excludes(i);
    }
    FixedPointProfile get() const {
        if (file.empty() && inline_json.empty()) throw std::invalid_argument("need --profile or --profile-json");
        json j;
        if (!file.empty()) j = read_json_file(file);
        else
            try {
                j = json::parse(inline_json);
            } catch (const json::parse_error& e) {
                throw std::invalid_argument(std::string("--profile-json: ") + e.what());
            }
        auto p = profile_from_json(j);
        p.validate();
        return p;
    }
};

Q parse_q(const std::string& s) {
    try {
        return qparse(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: " + s);
    }
}

json cyc_json(const CycNumber& x) {
    json j = {{"exact", x.str()}, {"numeric", x.numeric().real()}};
    if (auto q = x.to_rational()) j["rational"] = q->str();
    return j;
}

std::string search_table(const ProfileSearch& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario << "\n";
    for (const auto& b : r.branches) {
        os << "branch " << b.label;
        if (!b.consistent) {
            os << ": inconsistent (" << b.inconsistency << ")\n";
            continue;
        }
        os << ": L = " << b.L << ", chi(M/G) = " << b.chi_quotient.str() << ", sign(M/G) = " << b.sign_quotient.str()
           << "\n  counts [";
        for (std::size_t i = 0; i < b.type_names.size(); ++i) os << (i ? " " : "") << b.type_names[i];
        os << "]\n";
        long alive = 0;
        for (const auto& row : b.rows) {
            os << "  [";
            for (std::size_t i = 0; i < row.counts.size(); ++i) os << (i ? " " : "") << row.counts[i];
            os << "] sum Y^2 = " << row.self_int_sum << "  ";
            if (row.killed_by.empty()) {
                ++alive;
                os << "survives";
            } else
                os << "eliminated: " << row.killed_by;
            if (!row.detail.empty()) os << " (" << row.detail << ")";
            os << "\n";
        }
        os << "  " << b.rows.size() << " rows, " << alive << " surviving\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blow-up lattice searches and equivariant index computations"};
    app.require_subcommand(1);
    Output out;
    unsigned threads = 0;
    unsigned long seed = 0;
    app.add_flag("--json", out.as_json, "emit JSON");
    app.add_option("--out", out.path, "write output to a file");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--seed", seed, "seed for randomized property runs");

    // enumerate-spheres
    auto* en = app.add_subcommand("enumerate-spheres", "list sphere classes in normal form");
    SphereClassQuery q;
    std::optional<int> a_single;
    en->add_option("--n", q.n, "number of blow-ups")->required()->check(CLI::Range(1, 30));
    en->add_option("--alpha", q.alpha, "self-intersection -alpha")->check(CLI::Range(1, 20));
    en->add_option("--a", a_single, "single a-coefficient");
    auto* alo = en->add_option("--a-lo", q.a_lo, "lowest a");
    auto* ahi = en->add_option("--a-hi", q.a_hi, "highest a");
    en->add_flag("--area-bounded", q.area_condition, "only the area-bounded forms");
    en->add_flag("--allow-negative", q.allow_negative, "include negative-a forms");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verifier (or all)");
    std::string target;
    ver->add_option("target", target, "verifier name or 'all'")->required();

    // gindex
    auto* gi = app.add_subcommand("gindex", "fixed-point formulas");
    gi->require_subcommand(1);
    ProfileArgs prof;
    long power = 1;
    int prime = 0;
    long chi_M = 0, sign_M = 0;
    bool with_weak = false;
    auto* lef = gi->add_subcommand("lefschetz", "chi of the fixed set");
    prof.add(lef);
    auto* sig = gi->add_subcommand("signature", "G-signature fixed-point sum");
    prof.add(sig);
    sig->add_option("--power", power, "evaluate at g^e");
    auto* spin = gi->add_subcommand("spin", "Spin number");
    prof.add(spin);
    spin->add_option("--p", prime, "prime order")->required();
    spin->add_option("--power", power, "evaluate at g^e");
    auto* def = gi->add_subcommand("defects", "signature defects and weak quotient invariants");
    prof.add(def);
    def->add_option("--p", prime, "prime order")->required();
    def->add_option("--chi", chi_M, "chi(M)");
    def->add_option("--sign", sign_M, "sign(M)");
    def->add_flag("--weak", with_weak, "also report chi(M/G), sign(M/G)");
    std::string th1, th2;
    bool nonintegral = false;
    auto* tor = gi->add_subcommand("torus-model", "rotation on the cohomology of T^4");
    tor->add_option("--theta1", th1, "first angle, fraction of a turn")->required();
    tor->add_option("--theta2", th2, "second angle, fraction of a turn")->required();
    tor->add_flag("--allow-nonintegral", nonintegral, "report non-integral angle pairs instead of failing");
    int res_m = 0, res_b = 0;
    auto* res = gi->add_subcommand("resolve", "Hirzebruch-Jung resolution of 1/m(1,b)");
    res->add_option("--m", res_m)->required()->check(CLI::Range(2, 100000));
    res->add_option("--b", res_b)->required()->check(CLI::PositiveNumber);
    std::string scen;
    auto* ps = gi->add_subcommand("profile-search", "exhaustive fixed-point profile search");
    ps->add_option("--scenario", scen, "scenario JSON (path or fixture name)")->required();

    // areafeas
    auto* af = app.add_subcommand("areafeas", "exact area feasibility");
    af->require_subcommand(1);
    std::string sysfile;
    auto* afc = af->add_subcommand("check", "decide a linear system over the area variables");
    afc->add_option("--system", sysfile, "system JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    thread_count() = threads;
    (void)seed;

    try {
        if (*en) {
            if (a_single) q.a_lo = q.a_hi = *a_single;
            else if (q.area_condition && alo->count() == 0 && ahi->count() == 0)
                q.a_hi = area_bound(q.n, q.alpha);
            if (q.a_lo > q.a_hi) throw std::invalid_argument("--a-lo exceeds --a-hi");
            auto xs = enumerate_sphere_classes(q);
            if (xs.empty()) std::cerr << "warning: no classes in the requested range\n";
            json j = {{"query",
                       {{"n", q.n}, {"alpha", q.alpha}, {"a_lo", q.a_lo}, {"a_hi", q.a_hi},
                        {"area_bounded", q.area_condition}, {"allow_negative", q.allow_negative}}}};
            j.update(classes_summary_json(xs));
            std::ostringstream os;
            os << xs.size() << " classes\n";
            for (const auto& s : j["strata"]) os << "  a = " << s["a"] << ": " << s["count"] << "\n";
            for (const auto& x : xs) os << x.str() << "\n";
            out.emit(j, os.str());
            return 0;
        }
        if (*ver) {
            if (target == "all") {
                std::vector<Report> parts;
                Report all = verify_all(&parts);
                json j = json::array();
                std::string text;
                for (const auto& r : parts) {
                    j.push_back(r.to_json());
                    text += r.text();
                }
                out.emit(json{{"pass", all.pass}, {"reports", j}}, text + all.text());
                return all.pass ? 0 : 1;
            }
            Report r = run_verifier(target);
            out.emit(r.to_json(), r.text());
            return r.pass ? 0 : 1;
        }
        if (*lef) {
            auto p = prof.get();
            out.emit(json{{"lefschetz", lefschetz_fix(p)}});
        } else if (*sig) {
            auto p = prof.get();
            out.emit(json{{"power", power}, {"signature", cyc_json(signature_number(p, power))}});
        } else if (*spin) {
            auto p = prof.get();
            out.emit(json{{"p", prime}, {"power", power}, {"spin", cyc_json(spin_number(p, prime, power))}});
        } else if (*def) {
            auto p = prof.get();
            json pts = json::array(), ys = json::array();
            Q total = 0;
            for (const auto& x : p.points) {
                Q d = signature_defect(x, prime);
                total += d;
                pts.push_back({{"a", x.a}, {"b", x.b}, {"defect", d.str()}});
            }
            for (const auto& y : p.surfaces) {
                Q d = signature_defect(y, prime);
                total += d;
                ys.push_back({{"genus", y.genus}, {"self_int", y.self_int}, {"defect", d.str()}});
            }
            json j = {{"p", prime}, {"points", pts}, {"surfaces", ys}, {"total", total.str()}};
            if (with_weak) {
                auto w = weak_checks(prime, chi_M, sign_M, p);
                j["chi_quotient"] = w.chi.str();
                j["sign_quotient"] = w.sign.str();
                j["chi_integral"] = w.chi_integral;
            }
            out.emit(j);
        } else if (*tor) {
            try {
                out.emit(torus_model_json(torus_model(parse_q(th1), parse_q(th2), nonintegral)));
            } catch (const IntegralityError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        } else if (*res) {
            out.emit(resolution_json(hj_resolution(res_m, res_b)));
        } else if (*ps) {
            auto spec = scenario_from_json(read_json_file(find_scenario(scen)));
            auto r = profile_search(spec);
            out.emit(profile_search_json(r), search_table(r));
        } else if (*afc) {
            auto s = system_from_json(read_json_file(sysfile));
            auto w = feasible(s);
            json j = {{"feasible", w.has_value()}};
            if (w) j["witness"] = witness_json(s.n, *w);
            out.emit(j);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
