// zadic command-line front end.
//
// Every subcommand wraps one library operation and emits an envelope with
// the command name, a parameter echo, the result payload, and the elapsed
// milliseconds.  --format picks json, csv (sphere/lambda sweeps only) or
// text.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <zadic/zadic.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace zadic;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_big(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty list: '" + s + "'");
    return out;
}

std::vector<Int> parse_big_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_big(item));
    }
    if (out.empty()) throw UsageError("empty list: '" + s + "'");
    return out;
}

Window make_window(long long lo, long long hi) {
    if (lo > hi) throw UsageError("window: --lo must not exceed --hi");
    return Window(lo, hi);
}

long long default_cap() {
    if (const char* env = std::getenv("ZADIC_CAP")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw UsageError("ZADIC_CAP is not an integer");
        }
    }
    return 20;
}

// --set grammar: "g=4" (single base), "P=2,3" (prime powers),
// "S(P)=2,3" (semigroup), or a bare list: one entry means a single base,
// several mean prime powers.
wordlen::GeneratingSetSpec parse_set(const std::string& s, long long cap) {
    using wordlen::GeneratingSetSpec;
    try {
        if (s.rfind("g=", 0) == 0)
            return GeneratingSetSpec::single(std::stoll(s.substr(2)), cap);
        if (s.rfind("P=", 0) == 0)
            return GeneratingSetSpec::prime_powers_of(parse_ll_list(s.substr(2)), cap);
        if (s.rfind("S(P)=", 0) == 0)
            return GeneratingSetSpec::semigroup_of(parse_ll_list(s.substr(5)), cap);
        auto xs = parse_ll_list(s);
        if (xs.size() == 1) return GeneratingSetSpec::single(xs[0], cap);
        return GeneratingSetSpec::prime_powers_of(std::move(xs), cap);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --set: ") + e.what());
    }
}

std::string set_description(const wordlen::GeneratingSetSpec& spec) {
    std::string out;
    switch (spec.kind) {
    case wordlen::SetKind::single_base: return "g=" + std::to_string(spec.base);
    case wordlen::SetKind::prime_powers: out = "P="; break;
    case wordlen::SetKind::semigroup: out = "S(P)="; break;
    }
    for (std::size_t i = 0; i < spec.primes.size(); ++i)
        out += (i ? "," : "") + std::to_string(spec.primes[i]);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

std::string witness_text(const std::vector<wordlen::WitnessTerm>& witness) {
    if (witness.empty()) return "(empty)";
    std::string out;
    for (const auto& t : witness) {
        if (!out.empty()) out += " ";
        out += (t.sign > 0 ? "+" : "-");
        out += t.gen.base.str() + "^" + std::to_string(t.gen.exp);
    }
    return out;
}

std::string word_text(const std::vector<gadic::SignedPower>& word, long long base) {
    if (word.empty()) return "(empty)";
    std::string out;
    for (const auto& t : word) {
        if (!out.empty()) out += " ";
        out += (t.sign > 0 ? "+" : "-");
        out += std::to_string(base) + "^" + std::to_string(t.exp);
    }
    return out;
}

class Emitter {
public:
    Emitter(std::string format, std::string command)
        : format_(std::move(format)), command_(std::move(command)),
          start_(std::chrono::steady_clock::now()) {}

    void emit(const json& params, const json& result, const std::function<void()>& text_writer,
              const std::function<void()>& csv_writer = nullptr) const {
        if (format_ == "csv") {
            if (!csv_writer) throw UsageError("csv format is only available for sphere and lambda");
            csv_writer();
            return;
        }
        if (format_ == "json") {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start_)
                                .count();
            json envelope{{"command", command_}, {"params", params}, {"result", result},
                          {"ms", ms}};
            std::cout << envelope.dump() << "\n";
            return;
        }
        text_writer();
    }

private:
    std::string format_;
    std::string command_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word lengths, signed-digit representations, nets and additive complements"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // frees -h; --h is a radius option

    auto add_sub = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        sub->fallthrough();
        return sub;
    };

    std::string format = "text";
    int threads = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "parallelism for sweep subcommands")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    long long base = 2;
    std::string n_str;
    auto* repr = add_sub("repr", "minimum-length digit vector of n in base g");
    repr->add_option("--base", base, "base g >= 2")->required();
    repr->add_option("--n", n_str, "integer")->required();
    auto* length_cmd = add_sub("length", "g-adic length of n");
    length_cmd->add_option("--base", base, "base g >= 2")->required();
    length_cmd->add_option("--n", n_str, "integer")->required();

    std::string set_str;
    long long cap = -1;
    long long h = 1;
    long long lo = 0, hi = 0;
    long long limit = 10000;
    auto add_set_opts = [&](CLI::App* sub) {
        sub->add_option("--set", set_str, "generating set: g=G, P=..., S(P)=..., or 2,3")
            ->required();
        sub->add_option("--cap", cap, "exponent cap B (default: ZADIC_CAP or 20)")
            ->check(CLI::NonNegativeNumber);
    };
    auto* wl = add_sub("wordlen", "capped word length of n with witness");
    add_set_opts(wl);
    wl->add_option("--n", n_str, "integer")->required();
    auto* sph = add_sub("sphere", "all n in [lo,hi] of capped length exactly h");
    add_set_opts(sph);
    sph->add_option("--h", h, "radius")->required();
    sph->add_option("--lo", lo, "window lower end")->required();
    sph->add_option("--hi", hi, "window upper end")->required();
    auto* lam = add_sub("lambda", "smallest positive integer of capped length h");
    add_set_opts(lam);
    lam->add_option("--h", h, "target length")->required();
    lam->add_option("--limit", limit, "search limit")->capture_default_str();

    std::string targets_str = "149,151";
    long long bound = 200;
    auto* dio = add_sub("dio", "solve 2^a - 3^b = c for all targets c");
    dio->add_option("--targets", targets_str, "comma-separated targets")->capture_default_str();
    dio->add_option("--bound", bound, "exponent bound for a and b")->capture_default_str();

    std::string stride_str = "wide";
    std::string set_file;
    auto* nb = add_sub("net-build", "membership of the constructed sphere-union net");
    nb->add_option("--base", base, "base g >= 2")->required();
    nb->add_option("--h", h, "net radius")->required();
    nb->add_option("--stride", stride_str, "wide (2h+1) or narrow (h+1)")
        ->check(CLI::IsMember({"wide", "narrow"}))
        ->capture_default_str();
    nb->add_option("--lo", lo, "optional window lower end");
    nb->add_option("--hi", hi, "optional window upper end");
    auto* nc = add_sub("net-check", "verify the h-net property over a window");
    nc->add_option("--base", base, "base g >= 2")->required();
    nc->add_option("--h", h, "net radius")->required();
    nc->add_option("--lo", lo, "window lower end")->required();
    nc->add_option("--hi", hi, "window upper end")->required();
    nc->add_option("--cap", cap, "exponent cap for the ball search")
        ->check(CLI::NonNegativeNumber);
    nc->add_option("--set-file", set_file, "JSON eventually periodic set to check instead");
    nc->add_option("--stride", stride_str, "wide (2h+1) or narrow (h+1)")
        ->check(CLI::IsMember({"wide", "narrow"}))
        ->capture_default_str();
    auto* cover = add_sub("cover", "cover certificate for n in the constructed net");
    cover->add_option("--base", base, "base g >= 2")->required();
    cover->add_option("--h", h, "net radius")->required();
    cover->add_option("--n", n_str, "integer")->required();
    cover->add_option("--stride", stride_str, "wide (2h+1) or narrow (h+1)")
        ->check(CLI::IsMember({"wide", "narrow"}))
        ->capture_default_str();

    std::string w_file, c_file;
    bool asymptotic = false;
    auto* cc = add_sub("complement-check", "decide W + C = Z exactly");
    cc->add_option("--w", w_file, "finite set JSON file")->required();
    cc->add_option("--c", c_file, "eventually periodic set JSON file")->required();
    cc->add_flag("--asymptotic", asymptotic, "decide the asymptotic variant instead");
    auto* prune = add_sub("prune", "prune C toward a minimal complement on a window");
    prune->add_option("--w", w_file, "finite set JSON file")->required();
    prune->add_option("--c", c_file, "eventually periodic set JSON file")->required();
    prune->add_option("--lo", lo, "window lower end")->required();
    prune->add_option("--hi", hi, "window upper end")->required();

    bool inverse_flag = false;
    long long r = 1;
    auto* m23 = add_sub("map23", "length-preserving map (Z,d_2) -> (Z,d_3)");
    m23->add_option("--n", n_str, "integer")->required();
    m23->add_flag("--inverse", inverse_flag, "apply the inverse map instead");
    auto* dist = add_sub("distortion", "bi-Lipschitz failure witness for radius r");
    dist->add_option("--r", r, "witness index r >= 1")->required();


    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cap < 0) cap = default_cap();

        if (repr->parsed() || length_cmd->parsed()) {
            const bool want_repr = repr->parsed();
            Emitter out(format, want_repr ? "repr" : "length");
            const Int n = parse_big(n_str);
            const auto rep = gadic::canonical_repr(base, n);
            json params{{"base", base}, {"n", int_to_json(n)}};
            if (want_repr) {
                out.emit(params, json(rep), [&] {
                    std::cout << "base " << base << " digits " << json(rep.digits).dump()
                              << " length " << rep.length() << "\n";
                });
            } else {
                out.emit(params, json{{"length", rep.length()}}, [&] {
                    std::cout << "l_" << base << "(" << n << ") = " << rep.length() << "\n";
                });
            }
        } else if (wl->parsed()) {
            Emitter out(format, "wordlen");
            const auto spec = parse_set(set_str, cap);
            const Int n = parse_big(n_str);
            const auto res = wordlen::word_length(spec, n);
            json params{{"set", set_description(spec)}, {"cap", cap}, {"n", int_to_json(n)}};
            out.emit(params, json(res), [&] {
                std::cout << "l(" << n << ") = " << res.length
                          << (res.capped ? " (upper bound, cap B=" + std::to_string(res.cap) + ")"
                                         : " (exact)")
                          << " witness: " << witness_text(res.witness) << "\n";
            });
        } else if (sph->parsed()) {
            Emitter out(format, "sphere");
            const auto spec = parse_set(set_str, cap);
            wordlen::Engine engine(spec);
            const auto values = engine.sphere(h, make_window(lo, hi), threads);
            json params{{"set", set_description(spec)}, {"cap", cap}, {"h", h},
                        {"lo", lo},                     {"hi", hi}};
            out.emit(
                params, json(values),
                [&] {
                    std::cout << "S(" << h << ") within [" << lo << "," << hi << "], cap B=" << cap
                              << ":";
                    for (long long v : values) std::cout << " " << v;
                    std::cout << "\n";
                },
                [&] {
                    std::cout << "n\n";
                    for (long long v : values) std::cout << v << "\n";
                });
        } else if (lam->parsed()) {
            Emitter out(format, "lambda");
            const auto spec = parse_set(set_str, cap);
            const auto value = wordlen::lambda(spec, h, limit);
            json params{{"set", set_description(spec)}, {"cap", cap}, {"h", h}, {"limit", limit}};
            json result{{"h", h}, {"lambda", value ? json(*value) : json(nullptr)}};
            out.emit(
                params, result,
                [&] {
                    if (value)
                        std::cout << "lambda(" << h << ") = " << *value << " (cap B=" << cap
                                  << ")\n";
                    else
                        std::cout << "lambda(" << h << ") = not-found (limit " << limit
                                  << ", cap B=" << cap << ")\n";
                },
                [&] {
                    std::cout << "h,lambda,limit,cap\n"
                              << h << "," << (value ? std::to_string(*value) : "") << "," << limit
                              << "," << cap << "\n";
                });
        } else if (dio->parsed()) {
            Emitter out(format, "dio");
            const auto targets = parse_big_list(targets_str);
            const auto sols = wordlen::diophantine_search(targets, bound);
            json jt = json::array();
            for (const auto& t : targets) jt.push_back(int_to_json(t));
            json params{{"targets", jt}, {"bound", bound}};
            out.emit(params, json(sols), [&] {
                if (sols.empty()) {
                    std::cout << "no solutions with exponents <= " << bound << "\n";
                    return;
                }
                for (const auto& s : sols)
                    std::cout << "2^" << s.a << " - 3^" << s.b << " = " << s.target << "\n";
            });
        } else if (nb->parsed()) {
            Emitter out(format, "net-build");
            const auto spec = stride_str == "wide" ? nets::NetSpec::wide(base, h)
                                                   : nets::NetSpec::narrow(base, h);
            json params{{"base", base}, {"h", h}, {"stride", spec.stride}};
            json result{{"base", base}, {"h", h}, {"stride", spec.stride}};
            std::vector<long long> members;
            const bool windowed = nb->count("--lo") && nb->count("--hi");
            if (windowed) {
                make_window(lo, hi);
                for (long long x = lo; x <= hi; ++x)
                    if (nets::net_member(spec, Int(x))) members.push_back(x);
                params["lo"] = lo;
                params["hi"] = hi;
                result["members"] = members;
            }
            out.emit(params, result, [&] {
                std::cout << "net base " << base << " h " << h << " stride " << spec.stride;
                if (windowed) {
                    std::cout << "; members in [" << lo << "," << hi << "]:";
                    for (long long v : members) std::cout << " " << v;
                }
                std::cout << "\n";
            });
        } else if (nc->parsed()) {
            Emitter out(format, "net-check");
            json params{{"base", base}, {"h", h}, {"lo", lo}, {"hi", hi}, {"cap", cap}};
            nets::NetCheckReport report;
            if (!set_file.empty()) {
                const auto eps = load_json_file(set_file).get<complements::EventuallyPeriodicSet>();
                params["set_file"] = set_file;
                report = nets::net_check_window(
                    base, [&eps](const Int& x) { return eps.contains(x); }, h, make_window(lo, hi), cap,
                    threads);
            } else {
                const auto spec = stride_str == "wide" ? nets::NetSpec::wide(base, h)
                                                       : nets::NetSpec::narrow(base, h);
                params["stride"] = spec.stride;
                report = nets::net_check_window(spec, make_window(lo, hi), cap, threads);
            }
            json result;
            switch (report.verdict) {
            case nets::Verdict::covered:
                result = {{"verdict", "covered"}, {"certificates", report.certificates.size()}};
                break;
            case nets::Verdict::counterexample:
                result = {{"verdict", "counterexample"}, {"n", *report.offending}};
                break;
            case nets::Verdict::undecided:
                result = {{"verdict", "undecided"}, {"n", *report.offending}};
                break;
            }
            out.emit(params, result, [&] {
                if (report.verdict == nets::Verdict::covered)
                    std::cout << "covered: " << report.certificates.size() << " certificates\n";
                else if (report.verdict == nets::Verdict::counterexample)
                    std::cout << "counterexample: n = " << *report.offending << "\n";
                else
                    std::cout << "undecided at n = " << *report.offending << " (cap B=" << cap
                              << ")\n";
            });
        } else if (cover->parsed()) {
            Emitter out(format, "cover");
            const auto spec = stride_str == "wide" ? nets::NetSpec::wide(base, h)
                                                   : nets::NetSpec::narrow(base, h);
            const Int n = parse_big(n_str);
            const auto cert = nets::cover_witness(spec, n);
            if (!cert.validate(spec)) throw std::logic_error("certificate failed validation");
            json params{{"base", base}, {"h", h}, {"stride", spec.stride}, {"n", int_to_json(n)}};
            out.emit(params, nets::cover_certificate_to_json(cert, base), [&] {
                std::cout << "n = " << n << " -> c = " << cert.c
                          << ", word: " << word_text(cert.word, base) << "\n";
            });
        } else if (cc->parsed()) {
            Emitter out(format, "complement-check");
            const auto w = load_json_file(w_file).get<complements::FiniteSet>();
            const auto c = load_json_file(c_file).get<complements::EventuallyPeriodicSet>();
            json params{{"w", w_file}, {"c", c_file}, {"asymptotic", asymptotic}};
            if (asymptotic) {
                const auto res = complements::is_asymptotic_complement(w, c);
                json result{{"asymptotic_complement", res.asymptotic}};
                if (res.asymptotic)
                    result["exceptional"] = res.exceptional;
                else
                    result["missed_residue"] = {{"residue", res.infinite_witness->first},
                                                {"tail", res.infinite_witness->second}};
                out.emit(params, result, [&] {
                    if (res.asymptotic) {
                        std::cout << "asymptotic complement: yes; exceptional set:";
                        for (long long x : res.exceptional) std::cout << " " << x;
                        std::cout << "\n";
                    } else {
                        std::cout << "asymptotic complement: no; residue "
                                  << res.infinite_witness->first << " is missed on the "
                                  << (res.infinite_witness->second > 0 ? "positive" : "negative")
                                  << " tail\n";
                    }
                });
            } else {
                const bool yes = complements::is_complement(w, c);
                out.emit(params, json{{"complement", yes}}, [&] {
                    std::cout << "complement: " << (yes ? "yes" : "no") << "\n";
                });
            }
        } else if (prune->parsed()) {
            Emitter out(format, "prune");
            const auto w = load_json_file(w_file).get<complements::FiniteSet>();
            const auto c = load_json_file(c_file).get<complements::EventuallyPeriodicSet>();
            const auto res = complements::prune_minimal(w, c, make_window(lo, hi));
            std::vector<long long> members;
            for (long long x = lo; x <= hi; ++x)
                if (res.core_members[x - lo]) members.push_back(x);
            json params{{"w", w_file}, {"c", c_file}, {"lo", lo}, {"hi", hi}};
            json result{{"window", {{"lo", lo}, {"hi", hi}}},
                        {"members", members},
                        {"certificates", res.certificates}};
            out.emit(params, result, [&] {
                std::cout << "pruned members in [" << lo << "," << hi << "]:";
                for (long long v : members) std::cout << " " << v;
                std::cout << "\n" << res.certificates.size() << " minimality certificates\n";
            });
        } else if (m23->parsed()) {
            Emitter out(format, "map23");
            const Int given = parse_big(n_str);
            const Int n = inverse_flag ? map23::inverse(given) : given;
            json params{{"n", int_to_json(given)}, {"inverse", inverse_flag}};
            out.emit(params, map23::map_result_json(n), [&] {
                if (inverse_flag)
                    std::cout << "f^-1(" << given << ") = " << n << "\n";
                else
                    std::cout << "f(" << n << ") = " << map23::apply(n)
                              << ", l2 = " << gadic::length(2, n)
                              << ", l3 = " << gadic::length(3, map23::apply(n)) << "\n";
            });
        } else if (dist->parsed()) {
            Emitter out(format, "distortion");
            const auto wit = map23::distortion_witness(r);
            json params{{"r", r}};
            out.emit(params, json(wit), [&] {
                std::cout << "r=" << wit.r << ": m=" << wit.m << ", n=" << wit.n
                          << ", d2=" << wit.d2 << ", d3=" << wit.d3 << "\n";
            });
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
