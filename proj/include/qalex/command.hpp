#pragma once

#include <optional>
#include <variant>

#include "qalex/format.hpp"
#include "qalex/twist.hpp"
#include "qalex/verify.hpp"

namespace qalex::cli {

enum class Command { alex, family, formula, coeffs, stabilize, torus, verify };

Command parse_command(const std::string& name);

struct CommandRequest {
    Command command = Command::alex;
    int n = 0;
    std::string braid_text;
    std::optional<int> m;
    std::optional<std::pair<int, int>> m_range;
    int precision = 16;
    Format format = Format::text;
    Var var = Var::t;
    int depth = 4;
    unsigned seed = 20240915;
};

struct PolyResult {
    int n = 0;
    BraidWord word;
    LaurentPoly poly;
};

struct TableRow {
    int m = 0;
    LaurentPoly poly;
    std::optional<bool> matches_direct;
};

struct TableResult {
    int n = 0;
    BraidWord base;
    std::vector<TableRow> rows;
};

struct CoeffsResult {
    int n = 0;
    int m = 0;
    std::vector<LaurentPoly> f; // indexed by j
};

struct StabilizeResult {
    int n = 0;
    BraidWord base;
    StabilizationResult stab;
};

struct VerifyResult {
    std::vector<verify::CheckResult> checks;
    bool all_ok = true;
};

using CommandResult =
    std::variant<PolyResult, TableResult, CoeffsResult, StabilizeResult, VerifyResult>;

/// Validates the request and dispatches the computation. InvalidInput means
/// a user error (exit 1); ExactnessError means a violated identity (exit 2).
CommandResult run_command(const CommandRequest& req);

std::string format_output(const CommandResult& result, Format format, Var var);

} // namespace qalex::cli
