#include "schemekit/cli.hpp"

#include "schemekit/criteria.hpp"
#include "schemekit/error.hpp"
#include "schemekit/ingest.hpp"
#include "schemekit/modular.hpp"
#include "schemekit/report.hpp"
#include "schemekit/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schemekit {

namespace {

std::string join(const std::vector<std::size_t>& values)
{
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s + "]";
}

std::string valency_list(const Scheme& s)
{
    std::vector<std::size_t> k;
    for (auto v : s.valencies()) k.push_back(static_cast<std::size_t>(v));
    return join(k);
}

std::vector<Prime> parse_primes(const std::string& text)
{
    std::vector<Prime> primes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const auto item = text.substr(start, end - start);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("bad prime list '" + text + "'", 1, start + 1);
        }
        primes.emplace_back(value);
        start = end + 1;
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

Scheme load(const std::string& path, const std::string& format)
{
    auto kind = InputFormat::automatic;
    if (format == "rm") kind = InputFormat::rm;
    if (format == "tensor") kind = InputFormat::tensor;
    return load_scheme(read_file(path), kind);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse_io;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return exit_code::parse_io;
    } catch (const NotPrime& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse_io;
    } catch (const DuplicateId& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse_io;
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << '\n';
        return exit_code::not_applicable;
    } catch (const TooLarge& e) {
        err << "too large: " << e.what() << '\n';
        return exit_code::not_applicable;
    } catch (const Error& e) {
        err << "invalid: " << e.what() << '\n';
        return exit_code::validation;
    } catch (const std::logic_error& e) {
        err << "disagreement: " << e.what() << '\n';
        return exit_code::disagreement;
    }
}

int cmd_validate(const std::string& path, const std::string& format, std::ostream& out)
{
    const auto s = load(path, format);
    out << "OK order=" << s.order() << " d=" << s.d() << " k=" << valency_list(s) << '\n';
    return exit_code::ok;
}

int cmd_info(const std::string& path, const std::string& primes_text, std::ostream& out)
{
    const auto primes = parse_primes(primes_text);
    const auto s = load(path, "");
    std::vector<std::size_t> stars(s.involution().begin(), s.involution().end());
    out << "order=" << s.order() << " d=" << s.d() << " k=" << valency_list(s) << '\n';
    out << "involution=" << join(stars) << '\n';
    out << "thin_radical=" << thin_radical(s) << '\n';
    out << "thin_residue=" << thin_residue(s) << '\n';
    out << "min_singular=" << min_singular(s) << '\n';
    out << "quasi_thin=" << (is_quasi_thin(s) ? "yes" : "no") << '\n';
    out << "thin_thin_residue=" << (has_thin_thin_residue(s) ? "yes" : "no") << '\n';
    for (auto p : primes) {
        const auto sp = p_prime_relations(s, p);
        out << "p=" << p.value() << " S_p'=" << sp << " closure(S_p')=" << closure(s, sp)
            << " p'-valenced=" << (sp.is_full() ? "yes" : "no") << '\n';
    }
    return exit_code::ok;
}

int cmd_transitive(const std::string& path, std::uint64_t prime, const std::string& method, std::ostream& out,
                   std::ostream& err)
{
    const auto request = parse_method_request(method);
    if (!request) throw ParseError("unknown method '" + method + "'", 1, 1);
    const Prime p(prime);
    const auto s = load(path, "");
    const auto d = decide(s, p, *request);
    const char* verdict = d.transitive ? "transitive" : "not transitive";

    switch (*request) {
    case MethodRequest::oracle:
        out << verdict << '\n';
        break;
    case MethodRequest::structural:
        out << verdict << " (" << method_name(d.method) << ")\n";
        break;
    case MethodRequest::both:
        if (!d.applicable) {
            out << verdict << " (oracle only)\n";
        } else if (*d.agreement) {
            out << verdict << " (agree)\n";
        } else {
            out << verdict << " (disagree)\n";
            err << "oracle says " << (*d.oracle_verdict ? "transitive" : "not transitive") << ", "
                << method_name(d.method) << " says " << (*d.structural_verdict ? "transitive" : "not transitive")
                << '\n';
            return exit_code::disagreement;
        }
        break;
    }
    return exit_code::ok;
}

int cmd_singular(const std::string& path, std::size_t max_free, std::ostream& out)
{
    const auto s = load(path, "");
    const auto subsets = enumerate_singular(s, max_free);
    for (const auto& t : subsets) out << t << (is_closed(s, t) ? " closed" : " not-closed") << '\n';
    out << "count=" << subsets.size() << '\n';
    return exit_code::ok;
}

AnalysisReport analyze_block(const CatalogBlock& block, std::span<const Prime> primes)
{
    try {
        auto matrix = parse_relation_matrix(block.body, block.header_line + 1);
        auto scheme = validate_tensor(tensor_from_relation_matrix(matrix));
        return analyze(block.id, scheme, primes);
    } catch (const ParseError& e) {
        return failed_entry(block.id, EntryError::parse, e.what());
    } catch (const std::exception& e) {
        return failed_entry(block.id, EntryError::validation, e.what());
    }
}

std::vector<AnalysisReport> analyze_catalog(const std::vector<CatalogBlock>& blocks, std::span<const Prime> primes)
{
    std::vector<AnalysisReport> reports(blocks.size());
    std::map<std::string, std::size_t> first_seen;
    std::vector<bool> duplicate(blocks.size(), false);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto [it, inserted] = first_seen.emplace(blocks[i].id, blocks[i].header_line);
        if (!inserted) {
            duplicate[i] = true;
            reports[i] = failed_entry(blocks[i].id, EntryError::parse,
                                      "duplicate id (first defined at line " + std::to_string(it->second) + ")");
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < blocks.size(); i = next++) {
            if (!duplicate[i]) reports[i] = analyze_block(blocks[i], primes);
        }
    };
    const auto threads = std::min<std::size_t>(blocks.size(), std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return reports;
}

int cmd_batch(const std::string& path, const std::string& primes_text, const std::string& out_path,
              const std::string& format, std::ostream& out, std::ostream& err)
{
    const auto primes = parse_primes(primes_text);
    const auto blocks = split_catalog(read_file(path));
    const auto reports = analyze_catalog(blocks, primes);
    const auto text = emit_report(reports, format == "structured" ? ReportFormat::structured : ReportFormat::text);

    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot write '" + out_path + "'");
        file << text;
        if (!file) throw IoError("error writing '" + out_path + "'");
    }

    std::size_t failed = 0;
    std::size_t disagreements = 0;
    for (const auto& r : reports) {
        if (!r.ok()) {
            ++failed;
            err << r.id << ": " << r.error_message << '\n';
        }
        if (r.has_disagreement()) {
            ++disagreements;
            err << r.id << ": oracle and structural criterion disagree\n";
        }
    }
    if (disagreements) return exit_code::disagreement;
    if (failed) return exit_code::validation;
    return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Association scheme invariants and p-transitivity of modular adjacency algebras", "schemekit"};
    app.require_subcommand(1);

    std::string path;
    std::string format;
    std::string primes = "2,3,5";
    std::string method = "both";
    std::string out_path;
    std::uint64_t prime = 0;
    std::size_t max_free = default_max_free_bits;

    auto* validate = app.add_subcommand("validate", "Parse and check the scheme axioms");
    validate->add_option("path", path, "rm or tensor file")->required();
    validate->add_option("--format", format, "input format")->check(CLI::IsMember({"rm", "tensor"}));

    auto* info = app.add_subcommand("info", "Print structural invariants");
    info->add_option("path", path, "rm or tensor file")->required();
    info->add_option("--primes", primes, "comma-separated primes")->capture_default_str();

    auto* transitive = app.add_subcommand("transitive", "Decide p-transitivity");
    transitive->add_option("path", path, "rm or tensor file")->required();
    transitive->add_option("--prime", prime, "the characteristic p")->required();
    transitive->add_option("--method", method, "decision method")
        ->check(CLI::IsMember({"oracle", "structural", "both"}))
        ->capture_default_str();

    auto* singular = app.add_subcommand("singular", "List singular subsets");
    singular->add_option("path", path, "rm or tensor file")->required();
    singular->add_option("--max-free", max_free, "cap on relations outside the minimal singular subset")
        ->capture_default_str();

    auto* batch = app.add_subcommand("batch", "Analyze every entry of a catalog");
    batch->add_option("catalog", path, "catalog file")->required();
    batch->add_option("--primes", primes, "comma-separated primes")->capture_default_str();
    batch->add_option("--out", out_path, "write the report here instead of stdout");
    batch->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "structured"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::parse_io;
    }

    return guarded(err, [&] {
        if (*validate) return cmd_validate(path, format, out);
        if (*info) return cmd_info(path, primes, out);
        if (*transitive) return cmd_transitive(path, prime, method, out, err);
        if (*singular) return cmd_singular(path, max_free, out);
        return cmd_batch(path, primes, out_path, format, out, err);
    });
}

}  // namespace schemekit
