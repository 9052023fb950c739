#include "blockdim/cli.hpp"

#include "blockdim/blockcalc.hpp"
#include "blockdim/errors.hpp"
#include "blockdim/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>

namespace blockdim {

std::optional<int> parse_job(int argc, const char* const* argv, JobSpec& job, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of the simple modules of the invariant algebra B_lambda = (End V (x) U_lambda)^g"};
  std::string type = "A";
  std::string format = "table";
  std::string order = "root";
  std::vector<std::string> ext;

  app.add_option("--type", type, "Cartan type letter A-G")->required();
  app.add_option("--rank", job.rank, "Rank of the simple Lie algebra")->required();
  app.add_option("--lambda", job.lambda, "Dominant parameter, rational fundamental coordinates (\"1/2,0\")")
      ->required();
  app.add_option("--v", job.v_weights, "Highest weight of V, integral fundamental coordinates; repeatable")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--format", format, "table | json | csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--order-variant", order, "Minimality order reported in the 'minimal' column: root | pplus")
      ->check(CLI::IsMember({"root", "pplus"}));
  app.add_flag("--fast-path", job.fast_path, "Skip KL polynomials when lambda is in general position");
  app.add_option("--kl-dump", job.kl_dump_path, "Write the KL table of W_lambda to this file");
  app.add_option("--ext", ext, "Print graded Ext dims for two W_lambda words (regular lambda only)")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (type.size() != 1) {
    err << "error: --type expects a single letter\n";
    return kExitInput;
  }
  job.type_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  job.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Table;
  job.order = order == "pplus" ? OrderVariant::DominantWeights : OrderVariant::RootLattice;
  if (ext.size() == 2) job.ext_words = std::make_pair(ext[0], ext[1]);
  if (job.kl_dump_path.empty())
    if (const char* env = std::getenv("BLOCKDIM_KL_DUMP")) job.kl_dump_path = env;
  if (job.v_weights.empty() && !job.ext_words) {
    err << "error: at least one --v is required\n";
    return kExitInput;
  }
  return std::nullopt;
}

namespace {

int run_ext(const RootSystem& rs, const BlockContext& ctx, const JobSpec& job, std::ostream& out) {
  const CoxeterGroup& g = ctx.kl().group();
  const auto x = g.parse_word(job.ext_words->first);
  const auto y = g.parse_word(job.ext_words->second);
  const auto dims = ext_dimensions(rs, ctx.data(), ctx.kl(), x, y);
  if (job.format == OutputFormat::Json) {
    nlohmann::json j{{"x", g.word_string(x)}, {"y", g.word_string(y)}, {"ext", dims}};
    out << j.dump() << '\n';
  } else {
    out << "Ext^k(M(x.lambda), L(y.lambda)), x = " << g.word_string(x) << ", y = " << g.word_string(y) << ":";
    for (std::size_t k = 0; k < dims.size(); ++k) out << (k ? " " : " ") << dims[k];
    out << '\n';
  }
  return kExitOk;
}

} // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const RootSystem rs(job.type_letter, job.rank);
    const Weight lambda = Weight::parse(job.lambda);
    if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
      throw InputError("--lambda has " + std::to_string(lambda.rank()) + " coordinates, expected " +
                       std::to_string(rs.rank()));
    const BlockContext ctx(rs, lambda);

    if (!job.kl_dump_path.empty()) {
      std::ofstream f(job.kl_dump_path);
      if (!f) throw InputError("cannot open " + job.kl_dump_path);
      ctx.kl().dump(f);
    }
    if (job.ext_words) return run_ext(rs, ctx, job, out);

    std::vector<IntVec> vs;
    for (const auto& text : job.v_weights) {
      IntVec v = Weight::parse(text).to_ints();
      if (v.size() != static_cast<std::size_t>(rs.rank()))
        throw InputError("--v " + text + " has the wrong number of coordinates");
      vs.push_back(std::move(v));
    }

    const bool fast = job.fast_path && is_general_position(rs, lambda);
    if (job.format == OutputFormat::Csv) write_csv_header(out);
    bool consistent = true;
    for (const auto& v : vs) {
      const BlockReport r = fast ? generic_fast_path(rs, lambda, v) : block_report(ctx, v);
      consistent = consistent && r.checks.dimension_identity && r.checks.necessary_condition &&
                   r.checks.flag_conservation;
      switch (job.format) {
      case OutputFormat::Json: out << report_to_json(rs, r, job.order).dump() << '\n'; break;
      case OutputFormat::Csv: write_csv(out, rs, r, job.order); break;
      case OutputFormat::Table: write_table(out, rs, r, job.order); break;
      }
    }
    if (!consistent) {
      err << "error: a consistency check failed\n";
      return kExitInconsistent;
    }
    return kExitOk;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

} // namespace blockdim
