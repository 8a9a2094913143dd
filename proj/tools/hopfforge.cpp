#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hopfforge/associator.hpp"
#include "hopfforge/liebialg.hpp"
#include "hopfforge/quantizer.hpp"
#include "hopfforge/serialization.hpp"

namespace hf = hopfforge;
namespace lb = hopfforge::liebialg;
namespace as = hopfforge::associator;
namespace qz = hopfforge::quantizer;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

/// Usage or I/O problem; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string bialgebra;
    std::string associator;
    std::string hopf;
    std::string twist;
    std::string out;
    int order = 1;
    std::optional<int> cap;
    int degree = 0;
    int test_degree = 1;
    bool quiet = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw UsageError("cannot write " + path);
}

void print_report(const hf::Report& r, bool quiet)
{
    for (const auto& e : r.entries()) {
        if (quiet && e.passed)
            continue;
        std::cout << (e.passed ? "PASS " : "FAIL ") << e.name;
        if (!e.detail.empty())
            std::cout << "  (" << e.detail << ")";
        std::cout << '\n';
    }
}

int finish(const hf::Report& r, bool quiet)
{
    print_report(r, quiet);
    return r.passed() ? kOk : kCheckFailed;
}

lb::LieBialgebra load_bialgebra(const std::string& path) { return lb::parse(read_file(path)); }
as::AssociatorCoeffs load_associator(const std::string& path) { return as::parse(read_file(path)); }

int cap_for(const RunConfig& c) { return c.cap.value_or(c.order + 2); }

void require_order(const RunConfig& c, const as::AssociatorCoeffs& phi)
{
    if (c.order < 0)
        throw UsageError("order must be non-negative");
    if (phi.max_degree < c.order)
        throw UsageError("associator degree " + std::to_string(phi.max_degree) + " is below the order " +
                         std::to_string(c.order));
}

int cmd_check(const RunConfig& c)
{
    auto g = load_bialgebra(c.bialgebra);
    return finish(lb::validate(g), c.quiet);
}

int cmd_associator(const RunConfig& c)
{
    if (c.degree < 1 || c.degree > as::kDefaultDegreeCap)
        throw UsageError("degree must be between 1 and " + std::to_string(as::kDefaultDegreeCap));
    auto phi = as::solve(c.degree);
    hf::Report r = as::verify(phi, c.degree);
    if (r.passed())
        write_file(c.out, as::serialize(phi));
    if (!c.out.empty() && c.out != "-")
        return finish(r, c.quiet);
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_quantize(const RunConfig& c)
{
    auto g = load_bialgebra(c.bialgebra);
    auto phi = load_associator(c.associator);
    require_order(c, phi);
    auto h = qz::build_hopf(g, phi, c.order, cap_for(c));
    write_file(c.out, qz::serialize_hopf(*h));
    return kOk;
}

int cmd_verify(const RunConfig& c)
{
    auto [h, stored] = qz::parse_hopf(read_file(c.hopf));
    if (c.test_degree < 0 || c.test_degree + h->order() > h->degree_cap())
        throw UsageError("test degree + N exceeds the file's degree cap " + std::to_string(h->degree_cap()));
    hf::Report r;
    r.add("stored tables match recomputation", stored == h->tables());
    r.merge(qz::postconditions(*h));
    r.merge(qz::verify_hopf(*h, c.test_degree));
    return finish(r, c.quiet);
}

int cmd_twist(const RunConfig& c)
{
    auto g = load_bialgebra(c.bialgebra);
    auto phi = load_associator(c.associator);
    require_order(c, phi);
    hf::Json tj = hf::parse_file_text(read_file(c.twist));
    if (tj.is_object() && tj.contains("bialgebra_hash") && tj["bialgebra_hash"] != lb::hash(g))
        throw UsageError("twist file was made for a different bialgebra");
    auto j = lb::twist_from_json(tj, g.dim);
    hf::Report valid = lb::validate_twist(g, j);
    if (!valid.passed())
        return finish(valid, c.quiet);
    qz::TwistOptions opts;
    opts.test_degree = c.test_degree;
    opts.check_postconditions = false;
    auto res = qz::quantize_twist(g, j, phi, c.order, cap_for(c), opts);
    write_file(c.out, qz::serialize_twist(res));
    if (!c.out.empty() && c.out != "-")
        return finish(res.checks, c.quiet);
    return res.checks.passed() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact quantization of finite-dimensional Lie bialgebras"};
    app.require_subcommand(1);
    RunConfig c;

    auto* check = app.add_subcommand("check", "Validate a Lie bialgebra file");
    check->add_option("bialgebra", c.bialgebra, "Lie bialgebra JSON file")->required();

    auto* assoc = app.add_subcommand("associator", "Solve for associator coefficients");
    assoc->add_option("--degree,-d", c.degree, "Maximal degree")->required();
    assoc->add_option("--out,-o", c.out, "Output file (stdout if omitted)");

    auto* quantize = app.add_subcommand("quantize", "Build the quantized Hopf tables");
    quantize->add_option("--bialgebra,-b", c.bialgebra)->required();
    quantize->add_option("--associator,-a", c.associator)->required();
    quantize->add_option("--order,-N", c.order, "h-adic order N")->required();
    quantize->add_option("--cap,-D", c.cap, "Degree cap D (default N + 2)");
    quantize->add_option("--out,-o", c.out);

    auto* verify = app.add_subcommand("verify", "Check the Hopf axioms of a tables file");
    verify->add_option("--hopf", c.hopf)->required();
    verify->add_option("--test-degree,-k", c.test_degree, "Monomial degree tested");

    auto* twist = app.add_subcommand("twist", "Quantize a twist");
    twist->add_option("--bialgebra,-b", c.bialgebra)->required();
    twist->add_option("--twist,-j", c.twist)->required();
    twist->add_option("--associator,-a", c.associator)->required();
    twist->add_option("--order,-N", c.order)->required();
    twist->add_option("--cap,-D", c.cap);
    twist->add_option("--test-degree,-k", c.test_degree);
    twist->add_option("--out,-o", c.out);

    for (auto* sub : {check, assoc, quantize, verify, twist})
        sub->add_flag("--quiet,-q", c.quiet, "Print failures only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*check)
            return cmd_check(c);
        if (*assoc)
            return cmd_associator(c);
        if (*quantize)
            return cmd_quantize(c);
        if (*verify)
            return cmd_verify(c);
        if (*twist)
            return cmd_twist(c);
    } catch (const qz::PostconditionError& e) {
        print_report(e.report(), c.quiet);
        return kCheckFailed;
    } catch (const qz::InternalCheckFailure& e) {
        std::cerr << "check failure: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const hf::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
