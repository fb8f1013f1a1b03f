#pragma once

// Job execution behind the equideform command-line tool. Reports are JSON
// envelopes (schema equideform/report/1) that can be flattened to CSV or text.

#include "equideform/dimensions.hpp"
#include "equideform/error.hpp"
#include "equideform/io.hpp"
#include "equideform/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace equideform::cli {

inline constexpr const char *kToolName = "equideform";
inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr const char *kMaxOrderEnv = "EQUIDEFORM_MAX_ORDER";

enum class Command { DimImAlpha, OrdinaryCovariants, Homology, PsiReport, Verify };
enum class Format { Json, Csv, Text };
enum class LimitSource { Default, Env, Flag };

const char *command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;
const char *limit_source_name(LimitSource s) noexcept;

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitSizeCap = 4;

int exit_code_for(ErrorKind kind) noexcept;

struct JobSpec {
  Command command = Command::Verify;
  std::string input_path;                 // unused by verify
  std::optional<std::string> catalog_path; // built-in catalog when absent
  ImAlphaConvention convention = ImAlphaConvention::PaperCeilingFromE1;
  Format format = Format::Json;
  std::size_t max_order = kDefaultMaxOrder;
  LimitSource max_order_source = LimitSource::Default;
  std::optional<std::size_t> degree; // homology only
  VerifyScope scope = VerifyScope::Fast;
  HomologyLimits limits;
};

/// Flag over environment over default. Throws InvalidArgument on an
/// unparsable environment value.
void resolve_max_order(JobSpec &job, std::optional<std::size_t> flag, const char *env_value);

/// Runs the job, writes the report to out and errors to err, returns the
/// exit status.
int run_job(const JobSpec &job, std::ostream &out, std::ostream &err);

/// Building blocks, exposed for tests.
io::Json dimension_report_to_json(const DimensionReport &rep);
io::Json psi_report_to_json(const PsiReport &rep);
std::string render(const io::Json &report, Format format);

} // namespace equideform::cli
