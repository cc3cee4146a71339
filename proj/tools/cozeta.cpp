// Command line front end: expand coloring zeta functions, verify identities,
// run the finite-field oracles.  Exit codes: 0 success/equal, 1 mismatch,
// 2 usage or config error, 3 budget or precision error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <cozeta/identities.hpp>

using namespace cozeta;

namespace {

struct Job {
    std::string setup = "standard";
    std::string variety = "point";
    std::string form = "first";
    std::string identity;
    std::string kind;
    std::string qmode = "symbolic"; // "symbolic" or an integer
    std::string matrix;             // row-major entries for the centralizer oracle
    std::string out;
    std::string format = "json"; // json | plain
    long n = 2;
    long n_max = 3;
    long t_max = 6;
    long q_window = 16;
    long budget = -1; // enumeration cap; -1 = default
};

std::optional<Rat> parse_qmode(const std::string &s) {
    if (s == "symbolic") return std::nullopt;
    return rat_from_string(s);
}

OracleBudget make_budget(const Job &job) {
    OracleBudget b;
    if (job.budget >= 0) b.max_enumeration = Int(job.budget);
    if (const char *env = std::getenv("COLORING_ZETA_BUDGET")) {
        Int cap(env);
        b.max_enumeration = std::min(b.max_enumeration, cap);
    }
    return b;
}

void emit(const Job &job, const std::string &text) {
    if (!job.out.empty()) {
        std::ofstream f(job.out);
        if (!f) throw std::invalid_argument("cannot open output file " + job.out);
        f << text << "\n";
    }
    std::cout << text << std::endl;
}

std::string render_plain(const TruncatedSeries &s) {
    std::string r;
    for (const auto &[d, sl] : s.coeffs) {
        for (const auto &[e, c] : sl.terms) {
            if (!r.empty()) r += " + ";
            std::string term = rat_to_string(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) term += " " + s.vars.laurent[i] + "^" + std::to_string(e[i]);
            if (d) term += " " + s.vars.series_var + "^" + std::to_string(d);
            r += term;
        }
    }
    return r.empty() ? "0" : r;
}

int cmd_expand(const Job &job) {
    auto q = parse_qmode(job.qmode);
    VariableSpec vars = q ? VariableSpec::numeric_q(*q) : VariableSpec::symbolic_q();
    EngineCaps caps{job.t_max, job.q_window + 6 * job.t_max + job.t_max * (job.t_max + 1)};
    ColoringSetup setup = make_setup(job.setup);
    VarietySpec variety = VarietySpec::parse(job.variety);

    TruncatedSeries z;
    if (job.form == "first") {
        z = first_form(setup, variety, vars, caps);
    } else if (job.form == "second") {
        z = second_form(setup, variety, vars, caps);
    } else if (job.form == "third") {
        z = third_form(setup, variety, vars, caps);
    } else if (job.form == "direct") {
        z = TruncatedSeries(vars, job.t_max);
        for (long n = 0; n <= job.t_max; ++n)
            z.set_slice(n, direct_enum(setup, variety, vars, caps, n, job.t_max));
    } else {
        throw std::invalid_argument("unknown form: " + job.form +
                                    " (expected first|second|third|direct)");
    }
    if (job.format == "plain")
        emit(job, render_plain(z));
    else
        emit(job, series_to_json(z).dump(2));
    return 0;
}

int cmd_verify(const Job &job) {
    VerifyParams p;
    auto q = parse_qmode(job.qmode);
    if (q) p.q = as_integer(*q).convert_to<long>();
    p.t_cap = job.t_max;
    p.q_window = job.q_window;
    p.n_max = job.n_max;
    p.budget = make_budget(job);
    VerifyReport r = verify_identity(job.identity, p);
    emit(job, r.to_json().dump(2));
    switch (r.status) {
    case CompareStatus::Equal: return 0;
    case CompareStatus::Mismatch: return 1;
    default: return 3; // window too small: a precision problem, not a refutation
    }
}

MatrixOverGF parse_matrix(const std::string &s, long n) {
    MatrixOverGF m = MatrixOverGF::zero(n);
    std::size_t pos = 0;
    for (long k = 0; k < n * n; ++k) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("matrix needs n*n comma-separated entries");
        m.a[k] = static_cast<uint8_t>(std::stol(tok));
        if (comma == std::string::npos) {
            if (k + 1 != n * n)
                throw std::invalid_argument("matrix needs n*n comma-separated entries");
            break;
        }
        pos = comma + 1;
    }
    return m;
}

int cmd_oracle(const Job &job) {
    auto q = parse_qmode(job.qmode);
    if (!q) throw std::invalid_argument("the oracle needs a numeric prime power --q");
    long qv = as_integer(*q).convert_to<long>();
    Field F = Field::of_order(qv);
    OracleBudget budget = make_budget(job);

    auto start = std::chrono::steady_clock::now();
    Int count;
    if (job.kind == "gl-classes") {
        count = count_classes_gl(job.n, F, budget);
    } else if (job.kind == "mn-classes") {
        count = count_classes_mn(job.n, F, budget);
    } else if (job.kind == "unipotent") {
        count = count_unipotent(job.n, F, budget);
    } else if (job.kind == "commuting") {
        count = gamma(job.n, F, budget);
    } else if (job.kind == "commuting-glmn") {
        count = gamma_prime(job.n, F, budget);
    } else if (job.kind == "centralizer") {
        if (job.matrix.empty())
            throw std::invalid_argument("--count centralizer needs --matrix with n*n entries");
        count = centralizer_order_gl(F, parse_matrix(job.matrix, job.n), budget);
    } else {
        throw std::invalid_argument(
            "unknown count kind: " + job.kind +
            " (expected gl-classes|mn-classes|unipotent|commuting|commuting-glmn|centralizer)");
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    json j{{"count", count.str()},
           {"n", job.n},
           {"q", qv},
           {"kind", job.kind},
           {"elapsed_ms", elapsed.count()}};
    emit(job, j.dump(2));
    return 0;
}

void apply_config(const std::string &path, Job &job, const CLI::App &flags) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file " + path);
    json cfg = json::parse(f);
    auto str = [&](const char *key, const char *flag, std::string &dst) {
        if (cfg.contains(key) && !flags.count(flag)) dst = cfg.at(key).get<std::string>();
    };
    auto num = [&](const char *key, const char *flag, long &dst) {
        if (cfg.contains(key) && !flags.count(flag)) dst = cfg.at(key).get<long>();
    };
    str("setup", "--setup", job.setup);
    str("variety", "--variety", job.variety);
    str("form", "--form", job.form);
    str("identity", "--identity", job.identity);
    str("count", "--count", job.kind);
    str("matrix", "--matrix", job.matrix);
    str("out", "--out", job.out);
    str("format", "--format", job.format);
    if (cfg.contains("q") && !flags.count("--q"))
        job.qmode = cfg.at("q").is_string() ? cfg.at("q").get<std::string>()
                                            : std::to_string(cfg.at("q").get<long>());
    num("n", "--n", job.n);
    num("nmax", "--nmax", job.n_max);
    num("tmax", "--tmax", job.t_max);
    num("qwindow", "--qwindow", job.q_window);
    num("budget", "--budget", job.budget);
}

void add_common_flags(CLI::App *cmd, Job &job, std::string &config_path) {
    cmd->add_option("--setup", job.setup, "coloring setup: standard|partition|centralizer|commuting");
    cmd->add_option("--variety", job.variety, "variety: point|ga|gm|poly:c0,c1,...");
    cmd->add_option("--form", job.form, "formula route: first|second|third|direct");
    cmd->add_option("--identity", job.identity, "identity name for verify");
    cmd->add_option("--count", job.kind, "oracle count kind");
    cmd->add_option("--q", job.qmode, "q mode: 'symbolic' or an integer prime power");
    cmd->add_option("--n", job.n, "matrix dimension for oracle counts");
    cmd->add_option("--nmax", job.n_max, "largest degree/dimension for verify");
    cmd->add_option("--tmax", job.t_max, "T-degree cap");
    cmd->add_option("--qwindow", job.q_window, "required q-exactness width");
    cmd->add_option("--matrix", job.matrix, "row-major matrix entries for --count centralizer");
    cmd->add_option("--out", job.out, "also write the report to this file");
    cmd->add_option("--format", job.format, "output format: json|plain");
    cmd->add_option("--budget", job.budget, "enumeration budget cap");
    cmd->add_option("--config", config_path, "JSON config file; flags take precedence");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"coloring zeta function engine"};
    app.require_subcommand(1);
    Job job;
    std::string config_path;

    CLI::App *expand = app.add_subcommand("expand", "expand a coloring zeta function");
    CLI::App *verify = app.add_subcommand("verify", "verify an identity from the catalog");
    CLI::App *oracle = app.add_subcommand("oracle", "brute-force finite field counts");
    for (CLI::App *cmd : {expand, verify, oracle}) add_common_flags(cmd, job, config_path);

    try {
        app.parse(argc, argv);
        CLI::App *active = app.get_subcommands().front();
        if (!config_path.empty()) apply_config(config_path, job, *active);
        if (active == verify && job.identity.empty())
            throw std::invalid_argument("verify needs --identity; catalog: " + [] {
                std::string s;
                for (const auto &n : identity_catalog()) s += (s.empty() ? "" : "|") + n;
                return s;
            }());
        if (active == oracle && job.kind.empty())
            throw std::invalid_argument("oracle needs --count");
        if (active == expand) return cmd_expand(job);
        if (active == verify) return cmd_verify(job);
        return cmd_oracle(job);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_error &e) {
        std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump() << std::endl;
        return 3;
    } catch (const precision_error &e) {
        std::cerr << json{{"error", "precision"}, {"message", e.what()}}.dump() << std::endl;
        return 3;
    } catch (const integrality_error &e) {
        std::cerr << json{{"error", "integrality"}, {"message", e.what()}}.dump() << std::endl;
        return 1;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << std::endl;
        return 2;
    }
}
