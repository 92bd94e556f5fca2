// chordenum: command-line front end for the chord census library.
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification failure.

#include <chordenum/algebraic.hpp>
#include <chordenum/enumerator.hpp>
#include <chordenum/geometry.hpp>
#include <chordenum/group.hpp>
#include <chordenum/orbits.hpp>
#include <chordenum/tables.hpp>
#include <chordenum/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <utility>

namespace {

using namespace chordenum;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform record list: every record carries the same keys in the same order.
struct Records {
    std::vector<std::string> keys;
    std::vector<std::vector<std::string>> rows;
    ordered_json meta = ordered_json::object();
    std::vector<std::string> footer;  // CSV comment lines, JSON "summary"
    ordered_json summary = ordered_json::object();

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

bool looks_integral(const std::string& s)
{
    if (s.empty() || s.size() > 18)
        return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

ordered_json json_value(const std::string& s)
{
    if (looks_integral(s))
        return std::stoll(s);
    if (s == "true" || s == "false")
        return s == "true";
    return s;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Records& r, const std::string& format)
{
    if (format == "json") {
        ordered_json doc;
        doc["meta"] = r.meta;
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < r.keys.size(); ++i)
                obj[r.keys[i]] = json_value(row[i]);
            rows.push_back(std::move(obj));
        }
        doc["rows"] = rows;
        if (!r.summary.empty())
            doc["summary"] = r.summary;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < r.keys.size(); ++i)
        out << (i ? "," : "") << r.keys[i];
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
    for (const auto& line : r.footer)
        out << "# " << line << '\n';
    std::cout << out.str();
}

void add_summary(Records& r, const std::string& key, const std::string& value)
{
    r.summary[key] = json_value(value);
    r.footer.push_back(key + "=" + value);
}

ordered_json base_meta(int L)
{
    ordered_json m;
    m["L"] = L;
    m["version"] = std::string(kVersion);
    return m;
}

SymmetryMode parse_mode(const std::string& s)
{
    return s == "dihedral" ? SymmetryMode::Dihedral : SymmetryMode::Cyclic;
}

std::string point_text(const RationalPoint& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + p[i].to_string();
    return out + ")";
}

// --- subcommands -------------------------------------------------------------

void cmd_tables(const std::string& id, int L, const std::string& format)
{
    const Table t = build_table(id, L);
    std::cout << (format == "json" ? to_json(t) : to_csv(t));
}

void cmd_orbits(int L, int n, SymmetryMode mode, const std::string& format)
{
    if (n < 1 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [1, L]");
    const OrbitCensus c = census(L, n, mode);
    Records r;
    r.meta = base_meta(L);
    r.meta["n"] = n;
    r.meta["mode"] = std::string(to_string(mode));
    r.keys = {"prime_form", "size", "deficit", "reflection_invariant"};
    if (mode == SymmetryMode::Dihedral)
        r.keys.push_back("dihedral_prime_form");
    for (const auto& o : c.orbits) {
        std::vector<std::string> row{o.representative.to_string(), std::to_string(o.size), std::to_string(o.deficit),
                                     o.reflection_invariant ? "true" : "false"};
        if (mode == SymmetryMode::Dihedral)
            row.push_back(prime_form(o.representative, SymmetryMode::Dihedral).to_string());
        r.add(std::move(row));
    }
    add_summary(r, "N_C", std::to_string(c.distinct));
    add_summary(r, "DeltaN", std::to_string(c.repeating));
    add_summary(r, "N_M", std::to_string(c.total));
    add_summary(r, "nu_M", std::to_string(c.classes));
    if (mode == SymmetryMode::Dihedral) {
        add_summary(r, "nu_P", std::to_string(*c.invariant_classes));
        add_summary(r, "nu_N", std::to_string(*c.noninvariant_classes));
        add_summary(r, "nu_Q", std::to_string(*c.dihedral_classes));
    }
    emit(r, format);
}

void cmd_colored(int beads, int colors, SymmetryMode mode, const std::string& method, const std::string& format)
{
    const ColoredNecklaceProblem p(beads, colors, mode);
    Records r;
    r.meta = base_meta(colors);
    r.meta["beads"] = beads;
    r.meta["colors"] = colors;
    r.meta["mode"] = std::string(to_string(mode));
    r.meta["method"] = method;

    if (method == "burnside") {
        const Count classes = colored_count_burnside(p);
        r.keys = {"element", "cycles", "fixed"};
        Count fixed_sum = 0;
        for (const auto& e : burnside_fixed_point_table(p)) {
            r.add({e.element, std::to_string(e.cycles), std::to_string(e.fixed)});
            fixed_sum += e.fixed;
        }
        add_summary(r, "fixed_sum", std::to_string(fixed_sum));
        add_summary(r, "classes", std::to_string(classes));
        if (fixed_sum != classes * static_cast<Count>(r.rows.size()))
            throw VerificationFailure("fixed-point table disagrees with the closed form");
    } else {
        const ColoredCensus c = colored_count_brute(p);
        const Count burnside = colored_count_burnside(p);
        if (c.classes != burnside)
            throw VerificationFailure("brute force found " + std::to_string(c.classes) + " classes, Burnside " +
                                      std::to_string(burnside));
        if (method == "types") {
            r.keys = {"pattern", "distinct", "repeating", "classes"};
            for (const auto& pc : c.by_pattern)
                r.add({pc.label(), std::to_string(pc.distinct), std::to_string(pc.repeating),
                       std::to_string(pc.classes)});
        } else {
            r.keys = {"quantity", "value"};
            r.add({"distinct", std::to_string(c.distinct)});
            r.add({"repeating", std::to_string(c.repeating)});
            r.add({"total", std::to_string(c.total)});
            r.add({"classes", std::to_string(c.classes)});
        }
        add_summary(r, "classes", std::to_string(c.classes));
        add_summary(r, "burnside", std::to_string(burnside));
    }
    emit(r, format);
}

int cmd_verify(int L, const std::string& format)
{
    const VerifyReport report = run_verify(L);
    std::cout << (format == "csv" ? report_to_csv(report) : report_to_json(report));
    return report.ok() ? 0 : kExitVerification;
}

void cmd_geometry(const std::string& query, int L, int n, int k, const std::string& format)
{
    Records r;
    r.meta = base_meta(L);
    r.meta["query"] = query;
    r.meta["n"] = n;

    if (query == "orthocentre") {
        const LatticeSimplex s(L, n);
        const auto h = orthocentre(s);
        r.keys = {"point", "integral"};
        r.add({point_text(h.point), h.integral ? "true" : "false"});
    } else if (query == "faces") {
        r.keys = {"j", "faces"};
        for (int j = 0; j <= n; ++j)
            r.add({std::to_string(j), std::to_string(face_count(n, j))});
    } else if (query == "recursion") {
        const auto rec = interior_lattice_count_recursive(L, n);
        r.keys = {"m", "k", "tau"};
        for (int m = 0; m < static_cast<int>(rec.tau.size()); ++m)
            for (int kk = static_cast<int>(rec.tau[static_cast<std::size_t>(m)].size()) - 1; kk >= 1; --kk)
                r.add({std::to_string(m), std::to_string(kk), std::to_string(rec.at(kk, m))});
        add_summary(r, "N_C", std::to_string(rec.total));
    } else if (query == "lattice") {
        r.keys = {"n", "interior", "surface_formula", "volume_formula", "surface_oracle", "volume_oracle", "delta"};
        for (int m = 1; m <= L; ++m) {
            if (n != 0 && m != n)
                continue;
            const Count formula = surface_lattice_count_formula(L, m);
            std::string oracle = "overflow", volume = "overflow", delta = "overflow";
            try {
                const Count o = boundary_lattice_count_oracle(L, m);
                volume = std::to_string(lattice_count_oracle(L, m, Positivity::Nonnegative));
                oracle = std::to_string(o);
                delta = std::to_string(o - formula);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Overflow)
                    throw;
            }
            r.add({std::to_string(m), std::to_string(count_distinct(L, m)), std::to_string(formula),
                   std::to_string(volume_lattice_count_formula(L, m)), oracle, volume, delta});
        }
    } else if (query == "shell") {
        r.meta["k"] = k;
        r.keys = {"vertex", "point"};
        int i = 1;
        for (const auto& v : shell_vertices(L, n, k))
            r.add({std::to_string(i++), point_text(v)});
    } else if (query == "locus") {
        r.meta["k"] = k;
        const auto loc = palindrome_locus(L, n, k);
        r.keys = {"kind", "point"};
        r.add({"endpoint", point_text(loc.endpoint_a)});
        r.add({"endpoint", point_text(loc.endpoint_b)});
        for (const auto& c : loc.interior_points)
            r.add({"lattice", c.to_string()});
    } else if (query == "repeating") {
        r.keys = {"stabiliser", "points"};
        for (const auto& [g, count] : repeating_points_by_stabiliser(L, n))
            r.add({std::to_string(g), std::to_string(count)});
        add_summary(r, "DeltaN", std::to_string(geometric_repeating_count(L, n)));
    }
    emit(r, format);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Enumerate and count n-chords of an L-step equal temperament"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    int L = 12;
    std::string format = "csv";
    app.add_option("--temperament,-L", L, "Steps per octave")->check(CLI::Range(1, kMaxTemperament));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto* tables = app.add_subcommand("tables", "Print one of the census tables");
    std::string table_id;
    tables->add_option("--table", table_id, "scale, repN, repn, TTI, core, poli or face")->required();

    auto* orbits = app.add_subcommand("orbits", "List rotation classes of n-chords");
    int n = 0;
    std::string mode = "cyclic";
    orbits->add_option("--cardinality,-n", n, "Number of parts")->required();
    orbits->add_option("--mode", mode)->check(CLI::IsMember({"cyclic", "dihedral"}));

    auto* colored = app.add_subcommand("colored", "Count bead colourings up to symmetry");
    int beads = 4;
    int colors = 3;
    std::string method = "brute";
    colored->add_option("--beads", beads)->check(CLI::PositiveNumber);
    colored->add_option("--colors", colors)->check(CLI::PositiveNumber);
    colored->add_option("--mode", mode)->check(CLI::IsMember({"cyclic", "dihedral"}));
    colored->add_option("--method", method)->check(CLI::IsMember({"brute", "burnside", "types"}));

    auto* verify = app.add_subcommand("verify", "Run every cross-check and print the report");
    verify->add_option("--format", format, "Output format (default json)")->check(CLI::IsMember({"csv", "json"}));

    auto* geometry = app.add_subcommand("geometry", "Simplex and lattice queries");
    std::string query;
    int shell = 1;
    geometry->add_option("--query", query)
        ->required()
        ->check(CLI::IsMember({"orthocentre", "faces", "recursion", "lattice", "shell", "locus", "repeating"}));
    geometry->add_option("--cardinality,-n", n, "Dimension (lattice: 0 lists every n)");
    geometry->add_option("--shell,-k", shell, "Shell index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*tables)
            cmd_tables(table_id, L, format);
        else if (*orbits)
            cmd_orbits(L, n, parse_mode(mode), format);
        else if (*colored)
            cmd_colored(beads, colors, parse_mode(mode), method, format);
        else if (*verify)
            return cmd_verify(L, verify->count("--format") || app.count("--format") ? format : "json");
        else if (*geometry)
            cmd_geometry(query, L, n, shell, format);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return e.code() == ErrorCode::InternalInconsistency ? kExitVerification : kExitUsage;
    }
    return 0;
}
