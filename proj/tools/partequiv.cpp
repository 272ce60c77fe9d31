// partequiv: bases, counts and checks for symmetric-group equivariant layers.
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "partequiv/commands.hpp"

#ifndef PARTEQUIV_FIXTURE_DIR
#define PARTEQUIV_FIXTURE_DIR "fixtures"
#endif

namespace cli = partequiv::cli;

namespace {

struct CapFlags {
  std::uint64_t cap = partequiv::kDefaultEntryCap;
  bool force = false;
  std::uint64_t resolved() const { return force ? std::numeric_limits<std::uint64_t>::max() : cap; }
};

void add_cap(CLI::App* sub, CapFlags& flags) {
  sub->add_option("--cap", flags.cap, "refuse outputs with more matrix cells than this")
      ->capture_default_str();
  sub->add_flag("--force", flags.force, "ignore the size cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-sharing bases for layers equivariant to symmetric groups"};
  app.require_subcommand(1);
  int code = cli::kOk;

  cli::DimsArgs dims;
  auto* dims_cmd = app.add_subcommand("dims", "parameter counts, cross-checked against the quiver");
  dims_cmd->add_option("--n", dims.n);
  dims_cmd->add_option("--k", dims.k);
  dims_cmd->add_option("--l", dims.l);
  dims_cmd->add_option("--spec", dims.spec, "product layer, e.g. \"2:2->1,4:1->1\"");

  cli::BasisArgs basis;
  CapFlags basis_cap;
  auto* basis_cmd = app.add_subcommand("basis", "emit the standard basis of a layer");
  basis_cmd->add_option("--n", basis.n)->required();
  basis_cmd->add_option("--k", basis.k)->required();
  basis_cmd->add_option("--l", basis.l)->required();
  basis_cmd->add_option("--format", basis.format)
      ->check(CLI::IsMember({"json", "csv", "pattern"}))
      ->capture_default_str();
  basis_cmd->add_flag("--bias", basis.bias, "also emit the bias basis for the output side");
  basis_cmd->add_option("--workers", basis.workers)->check(CLI::Range(1u, 64u));
  add_cap(basis_cmd, basis_cap);

  cli::QuiverArgs quiver;
  auto* quiver_cmd = app.add_subcommand("quiver", "McKay quiver adjacency and walk counts");
  quiver_cmd->add_option("--n", quiver.n)->required();
  quiver_cmd->add_option("--power", quiver.power, "walk length");
  quiver_cmd->add_option("--from", quiver.from, "start partition, default (n)");
  quiver_cmd->add_option("--to", quiver.to, "end partition");

  cli::BratteliArgs bratteli;
  auto* bratteli_cmd = app.add_subcommand("bratteli", "restriction/induction multiplicities per level");
  bratteli_cmd->add_option("--n", bratteli.n)->required();
  bratteli_cmd->add_option("--levels", bratteli.levels)->required();

  cli::VerifyArgs verify;
  CapFlags verify_cap;
  auto* verify_cmd = app.add_subcommand("verify", "tiling, equivariance, oracle and dimension checks");
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--k", verify.k);
  verify_cmd->add_option("--l", verify.l);
  verify_cmd->add_option("--spec", verify.spec);
  verify_cmd->add_option("--trials", verify.options.trials)->capture_default_str();
  verify_cmd->add_option("--seed", verify.options.seed)->capture_default_str();
  verify_cmd->add_flag("--oracle", verify.oracle, "run the union-find oracle even on large grids");
  add_cap(verify_cmd, verify_cap);

  cli::AppendixArgs appendix;
  appendix.fixtures = PARTEQUIV_FIXTURE_DIR;
  auto* appendix_cmd = app.add_subcommand("appendix", "regenerate the reference patterns and compare");
  appendix_cmd->add_option("which", appendix.which, "A, B, C, D, E or all")->capture_default_str();
  appendix_cmd->add_option("--fixtures", appendix.fixtures, "fixture directory")->capture_default_str();

  cli::ProductArgs product;
  CapFlags product_cap;
  auto* product_cmd = app.add_subcommand("product", "layers for products of symmetric groups");
  product_cmd->add_option("--spec", product.spec)->required();
  product_cmd->add_option("--format", product.format)
      ->check(CLI::IsMember({"list", "pattern", "json"}))
      ->capture_default_str();
  add_cap(product_cmd, product_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  auto run = [&](auto&& fn) { code = cli::run_guarded(fn, std::cerr); };
  if (*dims_cmd) run([&] { return cli::cmd_dims(dims, std::cout); });
  if (*basis_cmd) {
    basis.cap = basis_cap.resolved();
    run([&] { return cli::cmd_basis(basis, std::cout); });
  }
  if (*quiver_cmd) run([&] { return cli::cmd_quiver(quiver, std::cout); });
  if (*bratteli_cmd) run([&] { return cli::cmd_bratteli(bratteli, std::cout); });
  if (*verify_cmd) {
    verify.cap = verify_cap.resolved();
    run([&] { return cli::cmd_verify(verify, std::cout); });
  }
  if (*appendix_cmd) run([&] { return cli::cmd_appendix(appendix, std::cout); });
  if (*product_cmd) {
    product.cap = product_cap.resolved();
    run([&] { return cli::cmd_product(product, std::cout); });
  }
  return code;
}
