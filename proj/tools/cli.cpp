#include "cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kesten/errors.hpp"
#include "kesten/json_io.hpp"
#include "kesten/quadrature.hpp"

namespace kesten::cli {

namespace {

using nlohmann::json;

struct RawArgs {
    std::string seqName;
    std::optional<int> count;
    std::optional<int> row;
    std::optional<int> col;

    std::string p;
    std::string r;
    int m = 0;
    std::string method = "closed";

    std::string id = "all";
    int mMax = -1;

    std::string family;
    std::string t;
    std::string d = "0";
    int size = 5;
};

SeqCommand buildSeq(const RawArgs& raw) {
    SeqCommand cmd;
    cmd.name = parseSequenceId(raw.seqName);
    cmd.count = raw.count;
    cmd.row = raw.row;
    cmd.col = raw.col;
    std::string display = sequenceName(cmd.name);
    if (sequenceIsTriangular(cmd.name)) {
        if (cmd.count)
            throw UsageError("'" + display + "' is triangular, use --row instead of --count");
        if (!cmd.row)
            throw UsageError("'" + display + "' is triangular, pass --row");
        int rowLo = cmd.name == SequenceId::triangleB ? 1 : 0;
        if (*cmd.row < rowLo)
            throw UsageError("--row must be at least " + std::to_string(rowLo) +
                             " for '" + display + "'");
    } else {
        if (cmd.row || cmd.col)
            throw UsageError("'" + display + "' is not triangular, use --count");
        if (!cmd.count) throw UsageError("pass --count for '" + display + "'");
        if (*cmd.count < 1) throw UsageError("--count must be at least 1");
    }
    if (cmd.col && !cmd.row) throw UsageError("--col needs --row");
    return cmd;
}

std::string linearEntry(SequenceId name, int i) {
    switch (name) {
        case SequenceId::catalan: return catalan(i).get_str();
        case SequenceId::fibonacci: return fibonacci(i).get_str();
        case SequenceId::lucas: return lucas(i).get_str();
        case SequenceId::fine: return fine(i).num().get_str();
        default: throw UsageError("not a linear sequence");
    }
}

Integer triangleEntry(SequenceId name, int row, int col) {
    switch (name) {
        case SequenceId::triangleT: return triangleT(row, col);
        case SequenceId::triangleB: return triangleB(row, col);
        case SequenceId::ballotS: return ballotS(row, col);
        default: throw UsageError("not a triangular sequence");
    }
}

int runSeq(const SeqCommand& cmd, std::ostream& out) {
    json arr = json::array();
    if (sequenceIsTriangular(cmd.name)) {
        int row = *cmd.row;
        if (cmd.col) {
            arr.push_back(triangleEntry(cmd.name, row, *cmd.col).get_str());
        } else {
            int lo = cmd.name == SequenceId::triangleB ? 1 : 0;
            for (int j = lo; j <= row; ++j)
                arr.push_back(triangleEntry(cmd.name, row, j).get_str());
        }
    } else {
        for (int i = 0; i < *cmd.count; ++i) arr.push_back(linearEntry(cmd.name, i));
    }
    out << arr.dump() << "\n";
    return 0;
}

int runMoment(const MomentCommand& cmd, std::ostream& out) {
    if (cmd.method == Method::quadrature) {
        QuadratureResult res =
            momentByQuadrature(cmd.m, cmd.p.toDouble(), cmd.r.toDouble(), 1e-10);
        json j{{"m", cmd.m},
               {"method", "quad"},
               {"value", res.value},
               {"estimatedError", res.estimatedError},
               {"evaluations", res.evaluations}};
        out << j.dump() << "\n";
        return 0;
    }
    KestenParams params = classifyParams(cmd.p, cmd.r);
    MomentValue value;
    switch (cmd.method) {
        case Method::closed: value = momentClosed(cmd.m, params); break;
        case Method::series: {
            Rational tol = pow(Rational(Integer(1), Integer(10)), 12);
            value = momentSeries(cmd.m, params, tol);
            break;
        }
        case Method::sform: value = momentSForm(cmd.m, params); break;
        case Method::tform: value = momentTForm(cmd.m, params); break;
        case Method::bform: value = momentBForm(cmd.m, params); break;
        case Method::comment1: value = momentComment1(cmd.m, params); break;
        default: throw UsageError("bad method");
    }
    out << toJson(value) << "\n";
    return 0;
}

int runVerify(const VerifyCommand& cmd, std::ostream& out) {
    if (cmd.id == "all") {
        bool allPassed = true;
        for (const auto& entry : identityRegistry()) {
            IdentityReport report = runIdentity(entry.id, cmd.mMax);
            out << toJson(report) << "\n";
            allPassed = allPassed && report.passed;
        }
        return allPassed ? 0 : 1;
    }
    IdentityReport report = runIdentity(cmd.id, cmd.mMax);
    out << toJson(report) << "\n";
    return report.passed ? 0 : 1;
}

int runHankel(const HankelCommand& cmd, std::ostream& out) {
    IdentityReport report = hankelCheck(cmd.family, cmd.t, cmd.d, cmd.size);
    out << toJson(report) << "\n";
    return report.passed ? 0 : 1;
}

} // namespace

Command parseArgs(const std::vector<std::string>& args) {
    RawArgs raw;
    CLI::App app{"exact moments of the Kesten distribution", "kesten"};
    app.require_subcommand(1);

    CLI::App* seq = app.add_subcommand("seq", "print sequence values as a JSON array");
    seq->add_option("--name", raw.seqName,
                    "catalan | triangleT | triangleB | ballotS | fibonacci | lucas | fine")
        ->required();
    seq->add_option("--count", raw.count, "how many values (linear sequences)");
    seq->add_option("--row", raw.row, "row index (triangular sequences)");
    seq->add_option("--col", raw.col, "single column within --row");

    CLI::App* moment = app.add_subcommand("moment", "even moment M_2m(p,r) as JSON");
    moment->add_option("--p", raw.p, "parameter p, \"num/den\" or integer")->required();
    moment->add_option("--r", raw.r, "parameter r, \"num/den\" or integer")->required();
    moment->add_option("--m", raw.m, "moment half-index m")->required();
    moment->add_option("--method", raw.method,
                       "closed | series | sform | tform | bform | comment1 | quad");

    CLI::App* verify = app.add_subcommand("verify", "sweep identities, one JSON report per line");
    verify->add_option("--id", raw.id, "identity id or \"all\"");
    verify->add_option("--m-max", raw.mMax, "sweep bound (default: per identity)");

    CLI::App* hankel = app.add_subcommand("hankel", "leading principal Hankel minors, JSON report");
    hankel->add_option("--family", raw.family, "kestenEven | truncatedConvex")->required();
    hankel->add_option("--t", raw.t, "t = r/p, \"num/den\" or integer")->required();
    hankel->add_option("--d", raw.d, "defect weight (truncatedConvex only)");
    hankel->add_option("--size", raw.size, "Hankel matrix size");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        throw HelpRequested{parsed.empty() ? app.help() : parsed.front()->help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (seq->parsed()) return buildSeq(raw);
    if (moment->parsed())
        return MomentCommand{Rational::fromString(raw.p), Rational::fromString(raw.r),
                             raw.m, parseMethod(raw.method)};
    if (verify->parsed()) return VerifyCommand{raw.id, raw.mMax};
    return HankelCommand{parseHankelFamily(raw.family), Rational::fromString(raw.t),
                         Rational::fromString(raw.d), raw.size};
}

int run(const Command& cmd, std::ostream& out) {
    return std::visit(
        [&](const auto& c) -> int {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SeqCommand>) return runSeq(c, out);
            else if constexpr (std::is_same_v<T, MomentCommand>) return runMoment(c, out);
            else if constexpr (std::is_same_v<T, VerifyCommand>) return runVerify(c, out);
            else return runHankel(c, out);
        },
        cmd);
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parseArgs(args), out);
    } catch (const HelpRequested& help) {
        err << help.text;
        return 0;
    } catch (const KestenError& e) {
        out << errorJson(e.code(), e.what()) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << errorJson("Internal", e.what()) << "\n";
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace kesten::cli
