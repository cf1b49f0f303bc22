// flagres: Iwasawa factorization, Schubert-cell coordinate changes and
// verification suites for SL(n, C).
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
// 3 tolerance violation, 4 non-generic point, 5 non-reduced word.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagres/flagres.hpp"

namespace {

using namespace flagres;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kTolerance = 3, kNonGeneric = 4, kNonReduced = 5 };

struct RunConfig {
    int n = 3;
    std::string word;  // comma-separated letters; empty means the longest element's staircase word
    std::uint64_t seed = 42;
    int samples = 100;
    Tolerances tol;
    std::string output = "json";
    std::string in = "-";
    std::string out = "-";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

Word parse_word(int n, const std::string& text) {
    if (text.empty()) return longest_word(n);
    std::vector<int> letters;
    for (const auto& p : split(text, ',')) {
        const double v = parse_double(p);
        if (v != static_cast<int>(v)) throw UsageError("word letters must be integers");
        letters.push_back(static_cast<int>(v));
    }
    try {
        return Word(n, std::move(letters));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// "re" or "re:im" items separated by commas.
std::vector<Complex> parse_coords(const std::string& text) {
    std::vector<Complex> out;
    if (text.empty()) return out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.empty() || parts.size() > 2) throw UsageError("coordinate must be 're' or 're:im': '" + item + "'");
        out.emplace_back(parse_double(parts[0]), parts.size() == 2 ? parse_double(parts[1]) : 0.0);
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file: " + path);
    f << text;
}

void check_tolerances(const Tolerances& t) {
    for (double v : {t.det, t.unitary, t.recon, t.coset, t.value})
        if (!(v > 0.0 && v < 1.0)) throw UsageError("tolerances must lie in (0, 1)");
}

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        os << "  [";
        for (std::size_t c = 0; c < m.dim(); ++c)
            os << (c ? ", " : "") << shortest(m(r, c).real()) << (m(r, c).imag() < 0 ? "-" : "+") << shortest(std::abs(m(r, c).imag())) << "i";
        os << "]\n";
    }
    return os.str();
}

std::string complex_text(Complex z) {
    return shortest(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") + shortest(std::abs(z.imag())) + "i";
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool structured_default) {
    cfg.output = structured_default ? "json" : "human";
    cmd->add_option("--tol-det", cfg.tol.det, "determinant tolerance");
    cmd->add_option("--tol-unitary", cfg.tol.unitary, "unitarity tolerance");
    cmd->add_option("--tol-recon", cfg.tol.recon, "relative reconstruction tolerance");
    cmd->add_option("--tol-coset", cfg.tol.coset, "membership / coset tolerance");
    cmd->add_option("--tol-value", cfg.tol.value, "identity agreement tolerance");
    cmd->add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", cfg.out, "output file, '-' for stdout");
}

void add_rank(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "matrix size n of SL(n)")->check(CLI::Range(2, 64));
    cmd->add_option("--word", cfg.word, "comma-separated simple-reflection letters");
}

int cmd_factor(const RunConfig& cfg) {
    const Matrix g = parse_json<Matrix>(read_input(cfg.in));
    const IwasawaFactors f = iwasawa_factor(g, cfg.tol);
    if (cfg.output == "json") {
        write_output(cfg.out, json(f).dump() + "\n");
    } else {
        write_output(cfg.out, "k =\n" + matrix_text(f.k) + "a =\n" + matrix_text(f.a) + "n =\n" + matrix_text(f.n));
    }
    return kOk;
}

int cmd_change_coords(const RunConfig& cfg, const std::string& direction, const std::string& coords, bool from_file) {
    ChartPoint pt;
    if (from_file) {
        pt = parse_json<ChartPoint>(read_input(cfg.in));
    } else {
        pt = ChartPoint{parse_word(cfg.n, cfg.word), parse_coords(coords)};
        if (pt.coords.empty()) pt.coords.assign(pt.word.length(), Complex{});
        if (pt.coords.size() != pt.word.length()) throw UsageError("expected one coordinate per word letter");
    }
    if (!is_reduced(pt.word)) throw NonReducedWordError("word is not reduced");

    const bool forward = direction == "zeta-to-z";
    const ChartPoint result = forward ? zeta_to_z(pt, cfg.tol) : z_to_zeta(pt, cfg.tol);

    std::optional<ChartPoint> closed;
    double deviation = 0.0;
    if (detail::is_sl3_longest(pt.word)) {
        // Forward: closed form of the input. Inverse: closed form applied to the recovered zeta.
        closed = closed_form_sl3(forward ? pt : result);
        const ChartPoint& z = forward ? result : pt;
        for (std::size_t j = 0; j < z.coords.size(); ++j) deviation = std::max(deviation, std::abs(z.coords[j] - closed->coords[j]));
    }

    if (cfg.output == "json") {
        json j = result;
        j["direction"] = direction;
        if (closed) {
            j["closed_form"] = json(*closed)["coords"];
            j["max_deviation"] = deviation;
        }
        write_output(cfg.out, j.dump() + "\n");
    } else {
        std::ostringstream os;
        const char* name = forward ? "z" : "zeta";
        for (std::size_t j = 0; j < result.coords.size(); ++j) os << name << (j + 1) << " = " << complex_text(result.coords[j]) << "\n";
        if (closed) {
            os << "closed form (SL(3), word 1,2,1):";
            for (const auto& c : closed->coords) os << " " << complex_text(c);
            os << "\nmax deviation: " << shortest(deviation) << "\n";
        }
        write_output(cfg.out, os.str());
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
    verify::SuiteConfig sc{parse_word(cfg.n, cfg.word), cfg.seed, cfg.samples, cfg.tol};
    std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
    bool ok = true;
    std::string text;
    json reports = json::array();
    for (const auto& name : names) {
        const auto rep = verify::run_suite(name, sc);
        ok = ok && rep.pass();
        if (cfg.output == "json") reports.push_back(verify::report_json(rep));
        else text += verify::report_text(rep);
    }
    if (cfg.output == "json") text = (names.size() == 1 ? reports[0] : json{{"reports", reports}, {"pass", ok}}).dump() + "\n";
    write_output(cfg.out, text);
    return ok ? kOk : kVerifyFailed;
}

struct Axis {
    std::size_t coord = 0;
    bool imaginary = false;
    double lo = 0.0, hi = 0.0;
    int count = 1;
};

Axis parse_axis(const std::string& spec, std::size_t length) {
    const auto parts = split(spec, ':');
    if (parts.size() != 5) throw UsageError("axis must be 'index:re|im:min:max:count': '" + spec + "'");
    Axis a;
    const double idx = parse_double(parts[0]);
    if (idx < 1 || idx > static_cast<double>(length) || idx != static_cast<int>(idx)) throw UsageError("axis index out of range");
    a.coord = static_cast<std::size_t>(idx) - 1;
    if (parts[1] != "re" && parts[1] != "im") throw UsageError("axis part must be 're' or 'im'");
    a.imaginary = parts[1] == "im";
    a.lo = parse_double(parts[2]);
    a.hi = parse_double(parts[3]);
    const double cnt = parse_double(parts[4]);
    if (cnt < 1 || cnt != static_cast<int>(cnt)) throw UsageError("axis count must be a positive integer");
    a.count = static_cast<int>(cnt);
    return a;
}

int cmd_grid(const RunConfig& cfg, const std::string& direction, const std::string& base, const std::vector<std::string>& axes_spec) {
    const Word w = parse_word(cfg.n, cfg.word);
    if (!is_reduced(w)) throw NonReducedWordError("word is not reduced");
    std::vector<Complex> origin = parse_coords(base);
    if (origin.empty()) origin.assign(w.length(), Complex{});
    if (origin.size() != w.length()) throw UsageError("--base needs one coordinate per word letter");
    if (axes_spec.empty() || axes_spec.size() > 2) throw UsageError("grid needs one or two --axis specs");
    std::vector<Axis> axes;
    for (const auto& s : axes_spec) axes.push_back(parse_axis(s, w.length()));

    const bool forward = direction == "zeta-to-z";
    const std::string in_name = forward ? "zeta" : "z", out_name = forward ? "z" : "zeta";
    std::ostringstream os;
    for (std::size_t j = 1; j <= w.length(); ++j) os << in_name << j << "_re," << in_name << j << "_im,";
    for (std::size_t j = 1; j <= w.length(); ++j) os << out_name << j << "_re," << out_name << j << "_im,";
    os << "status\n";

    const auto value = [](const Axis& a, int k) {
        return a.count == 1 ? a.lo : a.lo + (a.hi - a.lo) * static_cast<double>(k) / static_cast<double>(a.count - 1);
    };
    const auto set = [](std::vector<Complex>& v, const Axis& a, double x) {
        v[a.coord] = a.imaginary ? Complex{v[a.coord].real(), x} : Complex{x, v[a.coord].imag()};
    };

    bool non_generic = false;
    const int outer = axes[0].count, inner = axes.size() == 2 ? axes[1].count : 1;
    for (int i = 0; i < outer; ++i)
        for (int k = 0; k < inner; ++k) {
            std::vector<Complex> c = origin;
            set(c, axes[0], value(axes[0], i));
            if (axes.size() == 2) set(c, axes[1], value(axes[1], k));
            const ChartPoint pt{w, c};
            for (const auto& x : c) os << shortest(x.real()) << "," << shortest(x.imag()) << ",";
            try {
                const ChartPoint r = forward ? zeta_to_z(pt, cfg.tol) : z_to_zeta(pt, cfg.tol);
                for (const auto& x : r.coords) os << shortest(x.real()) << "," << shortest(x.imag()) << ",";
                os << "ok\n";
            } catch (const NonGenericPointError&) {
                non_generic = true;
                for (std::size_t j = 0; j < w.length(); ++j) os << "nan,nan,";
                os << "non_generic\n";
            }
        }
    write_output(cfg.out, os.str());
    return non_generic ? kNonGeneric : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iwasawa factorization and Schubert-cell coordinate changes for SL(n, C)"};
    app.require_subcommand(1);

    RunConfig factor_cfg, change_cfg, verify_cfg, grid_cfg;
    std::string direction = "zeta-to-z", grid_direction = "zeta-to-z", coords, suite, base;
    std::vector<std::string> axes;

    auto* factor = app.add_subcommand("factor", "Iwasawa factorization g = k a n of a matrix JSON file");
    add_common(factor, factor_cfg, true);
    factor->add_option("--in", factor_cfg.in, "matrix JSON file, '-' for stdin");

    auto* change = app.add_subcommand("change-coords", "convert between holomorphic (zeta) and Lu (z) coordinates");
    add_common(change, change_cfg, true);
    add_rank(change, change_cfg);
    change->add_option("--direction", direction, "zeta-to-z or z-to-zeta")->check(CLI::IsMember({"zeta-to-z", "z-to-zeta"}));
    change->add_option("--coords", coords, "comma-separated coordinates, each 're' or 're:im'");
    auto* change_in = change->add_option("--in", change_cfg.in, "chart point JSON file, '-' for stdin");

    auto* verify_cmd = app.add_subcommand("verify", "run a seeded verification suite");
    add_common(verify_cmd, verify_cfg, false);
    add_rank(verify_cmd, verify_cfg);
    verify_cmd->add_option("suite", suite, "iwasawa, inclusion_inverse, equivariance, diagram, root_identities, sl3, len2 or all")
        ->required()
        ->check(CLI::IsMember({"iwasawa", "inclusion_inverse", "equivariance", "diagram", "root_identities", "sl3", "len2", "all"}));
    verify_cmd->add_option("--seed", verify_cfg.seed, "PRNG seed");
    verify_cmd->add_option("--samples", verify_cfg.samples, "samples per suite");

    auto* grid = app.add_subcommand("grid", "emit change-of-variables samples on a rectangular grid as CSV");
    add_common(grid, grid_cfg, false);
    add_rank(grid, grid_cfg);
    grid->add_option("--direction", grid_direction, "zeta-to-z or z-to-zeta")->check(CLI::IsMember({"zeta-to-z", "z-to-zeta"}));
    grid->add_option("--base", base, "base point, comma-separated 're' or 're:im' (default 0)");
    grid->add_option("--axis", axes, "index:re|im:min:max:count (one or two)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*factor) {
            check_tolerances(factor_cfg.tol);
            return cmd_factor(factor_cfg);
        }
        if (*change) {
            check_tolerances(change_cfg.tol);
            return cmd_change_coords(change_cfg, direction, coords, change_in->count() > 0);
        }
        if (*verify_cmd) {
            check_tolerances(verify_cfg.tol);
            return cmd_verify(verify_cfg, suite);
        }
        if (*grid) {
            check_tolerances(grid_cfg.tol);
            return cmd_grid(grid_cfg, grid_direction, base, axes);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const NonReducedWordError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNonReduced;
    } catch (const NonGenericPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNonGeneric;
    } catch (const Error& e) {
        std::cerr << "tolerance violation: " << e.what() << "\n";
        return kTolerance;
    }
    return kUsage;
}
