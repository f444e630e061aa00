#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "pcfz/errors.hpp"
#include "pcfz/pcf.hpp"
#include "pcfz/refine.hpp"
#include "pcfz/zeros.hpp"

using namespace pcfz;
using C = std::complex<double>;
using nlohmann::json;

namespace {

constexpr int format_version = 1;

enum Exit { ok = 0, bad_flags = 2, polynomial_case = 3, no_convergence = 4 };

std::shared_ptr<spdlog::logger> log_sink()
{
    static auto logger = [] {
        auto l = spdlog::stderr_color_mt("pcfz");
        const char* env = std::getenv("PCFZ_LOG");
        l->set_level(env ? spdlog::level::from_str(env) : spdlog::level::off);
        return l;
    }();
    return logger;
}

std::string num(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string num(const std::optional<double>& x)
{
    return x ? num(*x) : std::string();
}

json jnum(const std::optional<double>& x)
{
    return x ? json(*x) : json(nullptr);
}

// Runs f(0..n-1) on up to jobs threads; results land in index order.
template <class R>
std::vector<R> parallel_map(int n, int jobs, const std::function<R(int)>& f)
{
    std::vector<R> out(n);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < n; i = next++)
            out[i] = f(i);
    };
    int t = std::clamp(jobs, 1, std::max(n, 1));
    std::vector<std::thread> pool;
    for (int k = 1; k < t; ++k)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    return out;
}

int default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// Family request as parsed from --family.
std::optional<ZeroFamilyKind> parse_family(const std::string& s)
{
    if (s == "apos") return ZeroFamilyKind::apos_complex;
    if (s == "pos") return ZeroFamilyKind::aneg_positive;
    if (s == "nonpos") return ZeroFamilyKind::aneg_nonpositive;
    if (s == "complex") return ZeroFamilyKind::aneg_complex;
    return std::nullopt;
}

struct Task {
    ZeroFamily family;
    int m;
};

// (family, m) pairs to compute, ordered by family then m.
std::vector<Task> plan(double a, const std::string& family, std::optional<int> count, const std::vector<int>& ms)
{
    if (a == 0)
        throw DomainError("a must be non-zero");
    std::vector<ZeroFamily> fams = zero_families(a);
    if (family != "auto") {
        auto kind = parse_family(family);
        auto it = std::find_if(fams.begin(), fams.end(), [&](const ZeroFamily& f) { return f.kind == *kind; });
        if (it == fams.end()) {
            if ((*kind == ZeroFamilyKind::aneg_complex || *kind == ZeroFamilyKind::aneg_nonpositive) && a < 0)
                throw PolynomialCaseError("family " + family + " does not exist for odd-integer u = -2a");
            throw DomainError("family " + family + " does not exist for a = " + num(a));
        }
        fams = {*it};
    }
    std::vector<Task> tasks;
    for (const ZeroFamily& f : fams) {
        if (!ms.empty()) {
            for (int m : ms)
                tasks.push_back({f, m});
            continue;
        }
        // auto lists every finite family in full; --count limits the unbounded ones
        int n = !f.count ? count.value_or(5) : (count && family != "auto" ? std::min(*count, *f.count) : *f.count);
        for (int k = 0; k < n; ++k)
            tasks.push_back({f, f.first_index + k});
    }
    return tasks;
}

struct ZeroRecord {
    std::string family;
    double a = 0;
    int m = 0;
    int terms_used = 0;
    C z_approx;
    std::optional<C> z_refined;
    std::optional<double> eps1, eps2, residual;
    std::string error;
    bool polynomial = false;
};

ZeroRecord compute_zero(const Task& t, int terms, bool refine)
{
    ZeroRecord r;
    r.family = std::string(to_string(t.family.kind));
    r.a = t.family.a;
    r.m = t.m;
    r.terms_used = terms;
    try {
        ZeroApproximation z = zero_approximation(t.family.kind, t.family.a, t.m, terms);
        r.z_approx = z.z;
        if (refine) {
            RefinedZero rz = t_iterate(t.family.a, z.z);
            r.z_refined = rz.value;
            r.residual = rz.residual;
            ValidationRecord v = metrics(z.z, rz.value);
            r.eps1 = v.eps1;
            r.eps2 = v.eps2;
        }
        log_sink()->debug("{} m={} approx=({}, {})", r.family, t.m, z.z.real(), z.z.imag());
    } catch (const PolynomialCaseError& e) {
        r.error = e.what();
        r.polynomial = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

const char* zero_columns = "family,a,m,terms_used,z_approx_re,z_approx_im,z_refined_re,z_refined_im,eps1,eps2,residual";

json zero_json(const ZeroRecord& r)
{
    std::optional<double> rre, rim;
    if (r.z_refined) {
        rre = r.z_refined->real();
        rim = r.z_refined->imag();
    }
    return {{"family", r.family},         {"a", r.a},
            {"m", r.m},                   {"terms_used", r.terms_used},
            {"z_approx_re", r.z_approx.real()}, {"z_approx_im", r.z_approx.imag()},
            {"z_refined_re", jnum(rre)},  {"z_refined_im", jnum(rim)},
            {"eps1", jnum(r.eps1)},       {"eps2", jnum(r.eps2)},
            {"residual", jnum(r.residual)}};
}

std::string zero_csv(const ZeroRecord& r)
{
    std::optional<double> rre, rim;
    if (r.z_refined) {
        rre = r.z_refined->real();
        rim = r.z_refined->imag();
    }
    return r.family + ',' + num(r.a) + ',' + std::to_string(r.m) + ',' + std::to_string(r.terms_used) + ',' +
           num(r.z_approx.real()) + ',' + num(r.z_approx.imag()) + ',' + num(rre) + ',' + num(rim) + ',' +
           num(r.eps1) + ',' + num(r.eps2) + ',' + num(r.residual);
}

// Exit code for a batch: polynomial-case before non-convergence; failures reported on stderr.
template <class R>
int report_failures(const std::vector<R>& rs)
{
    int code = ok;
    for (const R& r : rs) {
        if (r.error.empty())
            continue;
        std::cerr << "pcfz: " << r.family << " m=" << r.m << ": " << r.error << '\n';
        code = r.polynomial ? polynomial_case : (code == polynomial_case ? code : no_convergence);
    }
    return code;
}

struct ValidateRecord {
    std::string family;
    double a = 0;
    int m = 0;
    int terms_used = 0;
    ValidationRecord v;
    std::string error;
    bool polynomial = false;
};

// Hermite nodes from the Jacobi matrix, descending, in the z variable of U.
std::vector<double> hermite_oracle(int n)
{
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k)
        J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
    Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(J, Eigen::EigenvaluesOnly).eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + n);
    std::sort(out.rbegin(), out.rend());
    for (double& x : out)
        x *= std::sqrt(2.0);
    return out;
}

// Independent reference: Newton's method on U from the leading-order seed, or the
// Jacobi-matrix nodes in the Hermite case.
C oracle_zero(const Task& t)
{
    double a = t.family.a;
    double n = -a - 0.5;
    if (t.family.kind == ZeroFamilyKind::aneg_positive && n == std::floor(n) && n >= 1)
        return hermite_oracle(static_cast<int>(n)).at(t.m - 1);
    C z = zero_approximation(t.family.kind, a, t.m, 1).z;
    bool real = z.imag() == 0;
    for (int it = 0; it < 50; ++it) {
        PcfValue v = eval_U(a, z);
        C step = v.value / v.derivative;
        if (real)
            step = step.real();
        z -= step;
        if (std::abs(step) <= 1e-15 * std::abs(z))
            return z;
    }
    throw ConvergenceError("Newton reference did not converge", z, 0);
}

ValidateRecord compute_validation(const Task& t, int terms, bool oracle)
{
    ValidateRecord r;
    r.family = std::string(to_string(t.family.kind));
    r.a = t.family.a;
    r.m = t.m;
    r.terms_used = terms;
    try {
        ZeroApproximation z = zero_approximation(t.family.kind, t.family.a, t.m, terms);
        C ref = oracle ? oracle_zero(t) : t_iterate(t.family.a, z.z).value;
        r.v = metrics(z.z, ref);
        r.v.m = t.m;
    } catch (const PolynomialCaseError& e) {
        r.error = e.what();
        r.polynomial = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

const char* validate_columns =
    "family,a,m,terms_used,z_approx_re,z_approx_im,z_ref_re,z_ref_im,g1_approx,g1_ref,g2_approx,g2_ref,eps1,eps2";

std::string validate_csv(const ValidateRecord& r)
{
    const ValidationRecord& v = r.v;
    return r.family + ',' + num(r.a) + ',' + std::to_string(r.m) + ',' + std::to_string(r.terms_used) + ',' +
           num(v.z_approx.real()) + ',' + num(v.z_approx.imag()) + ',' + num(v.z_ref.real()) + ',' +
           num(v.z_ref.imag()) + ',' + num(v.g1_approx) + ',' + num(v.g1_ref) + ',' + num(v.g2_approx) + ',' +
           num(v.g2_ref) + ',' + num(v.eps1) + ',' + num(v.eps2);
}

json validate_json(const ValidateRecord& r)
{
    const ValidationRecord& v = r.v;
    return {{"family", r.family},
            {"a", r.a},
            {"m", r.m},
            {"terms_used", r.terms_used},
            {"z_approx_re", v.z_approx.real()},
            {"z_approx_im", v.z_approx.imag()},
            {"z_ref_re", v.z_ref.real()},
            {"z_ref_im", v.z_ref.imag()},
            {"g1_approx", v.g1_approx},
            {"g1_ref", v.g1_ref},
            {"g2_approx", jnum(v.g2_approx)},
            {"g2_ref", jnum(v.g2_ref)},
            {"eps1", v.eps1},
            {"eps2", jnum(v.eps2)}};
}

template <class R>
void emit(std::ostream& os, const std::string& format, const std::string& meta, const char* columns,
          const std::vector<R>& rs, std::string (*csv)(const R&), json (*js)(const R&))
{
    if (format == "json") {
        json arr = json::array();
        for (const R& r : rs)
            if (r.error.empty())
                arr.push_back(js(r));
        os << arr.dump(1) << '\n';
        return;
    }
    os << "# " << meta << '\n' << columns << '\n';
    for (const R& r : rs)
        if (r.error.empty())
            os << csv(r) << '\n';
}

struct CommonArgs {
    double a = 0;
    std::string family = "auto";
    std::optional<int> count;
    std::vector<int> ms;
    int terms = 3;
    std::string format = "csv";
    int jobs = default_jobs();
};

void add_common(CLI::App* cmd, CommonArgs& c)
{
    cmd->add_option("--a", c.a, "Parameter a of U(a, z)")->required();
    cmd->add_option("--family", c.family, "Zero family")
        ->check(CLI::IsMember({"auto", "apos", "pos", "nonpos", "complex"}));
    cmd->add_option("--count", c.count, "Zeros per family (complex families default to 5)")->check(CLI::PositiveNumber);
    cmd->add_option("--m", c.ms, "Explicit indices, overriding --count")->delimiter(',');
    cmd->add_option("--terms", c.terms, "Expansion terms")->check(CLI::Range(1, 3));
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

std::string meta_common(const std::string& cmd, const CommonArgs& c)
{
    return "pcfz " + cmd + " format=" + std::to_string(format_version) + " a=" + num(c.a) + " family=" + c.family +
           " terms=" + std::to_string(c.terms);
}

int run_zeros(const CommonArgs& c, bool refine)
{
    std::vector<Task> tasks = plan(c.a, c.family, c.count, c.ms);
    log_sink()->info("zeros: {} tasks on {} threads", tasks.size(), c.jobs);
    auto rs = parallel_map<ZeroRecord>(static_cast<int>(tasks.size()), c.jobs,
                                       [&](int i) { return compute_zero(tasks[i], c.terms, refine); });
    emit<ZeroRecord>(std::cout, c.format, meta_common("zeros", c) + " refine=" + (refine ? "1" : "0"), zero_columns,
                     rs, zero_csv, zero_json);
    return report_failures(rs);
}

int run_validate(const CommonArgs& c, const std::string& reference)
{
    std::vector<Task> tasks = plan(c.a, c.family, c.count, c.ms);
    bool oracle = reference == "oracle";
    auto rs = parallel_map<ValidateRecord>(static_cast<int>(tasks.size()), c.jobs,
                                           [&](int i) { return compute_validation(tasks[i], c.terms, oracle); });
    emit<ValidateRecord>(std::cout, c.format, meta_common("validate", c) + " reference=" + reference,
                         validate_columns, rs, validate_csv, validate_json);
    return report_failures(rs);
}

struct GridArgs {
    double a = 0;
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
    int nx = 0, ny = 0;
    std::string out;
    int jobs = default_jobs();
};

int run_phase_grid(const GridArgs& g)
{
    bool bad_x = g.re_max < g.re_min || (g.nx > 1 && g.re_max == g.re_min);
    bool bad_y = g.im_max < g.im_min || (g.ny > 1 && g.im_max == g.im_min);
    if (bad_x || bad_y) {
        std::cerr << "pcfz: empty or inverted range\n";
        return bad_flags;
    }
    auto coord = [](double lo, double hi, int n, int k) { return n == 1 ? lo : ((n - 1 - k) * lo + k * hi) / (n - 1); };
    auto rows = parallel_map<std::string>(g.ny, g.jobs, [&](int j) {
        double y = coord(g.im_min, g.im_max, g.ny, j);
        std::string s;
        for (int i = 0; i < g.nx; ++i) {
            double x = coord(g.re_min, g.re_max, g.nx, i);
            double ph = std::arg(eval_U(g.a, C(x, y)).value);
            s += num(x) + ',' + num(y) + ',' + num(ph) + '\n';
        }
        return s;
    });
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
        std::cerr << "pcfz: cannot open " << g.out << '\n';
        return bad_flags;
    }
    f << "# pcfz phase-grid format=" << format_version << " a=" << num(g.a) << " nx=" << g.nx << " ny=" << g.ny
      << '\n'
      << "x,y,arg\n";
    for (const auto& r : rows)
        f << r;
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zeros of the parabolic cylinder function U(a, z)"};
    app.require_subcommand(1);

    CommonArgs zc;
    bool refine = true;
    auto* zeros = app.add_subcommand("zeros", "Tabulate zeros");
    add_common(zeros, zc);
    zeros->add_flag("--refine,!--no-refine", refine, "Polish with the fixed-point iteration");

    CommonArgs vc;
    std::string reference = "refined";
    auto* validate = app.add_subcommand("validate", "Compare expansions against reference zeros");
    add_common(validate, vc);
    validate->add_option("--reference", reference, "Reference zeros")
        ->check(CLI::IsMember({"refined", "oracle"}));

    GridArgs g;
    auto* grid = app.add_subcommand("phase-grid", "Phase of U(a, x + iy) on a grid");
    grid->add_option("--a", g.a)->required();
    grid->add_option("--re-min", g.re_min)->required();
    grid->add_option("--re-max", g.re_max)->required();
    grid->add_option("--im-min", g.im_min)->required();
    grid->add_option("--im-max", g.im_max)->required();
    grid->add_option("--nx", g.nx)->required()->check(CLI::PositiveNumber);
    grid->add_option("--ny", g.ny)->required()->check(CLI::PositiveNumber);
    grid->add_option("--out", g.out)->required();
    grid->add_option("--jobs", g.jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : bad_flags;
    }

    try {
        if (*zeros)
            return run_zeros(zc, refine);
        if (*validate)
            return run_validate(vc, reference);
        return run_phase_grid(g);
    } catch (const PolynomialCaseError& e) {
        std::cerr << "pcfz: " << e.what() << '\n';
        return polynomial_case;
    } catch (const DomainError& e) {
        std::cerr << "pcfz: " << e.what() << '\n';
        return bad_flags;
    } catch (const ConvergenceError& e) {
        std::cerr << "pcfz: " << e.what() << '\n';
        return no_convergence;
    }
}
