#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlsn/ccsds.hpp"
#include "mlsn/config.hpp"
#include "mlsn/errors.hpp"
#include "mlsn/sweep.hpp"
#include "mlsn/time.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::vector<std::string> scenario_filter;
  std::string out_dir;
  int threads = -1;  // -1 = leave config value
  long seed = 0;     // reserved; the pipeline is deterministic without randomness
  int verbosity = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_run_flags) {
  cmd->add_option("--config", opts.config_path, "Config file (TOML-style or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", opts.overrides, "Override a config key, e.g. --set frames.frame_bytes=512");
  if (with_run_flags) {
    cmd->add_option("--scenario", opts.scenario_filter, "Run only the named scenario(s)");
    cmd->add_option("--out", opts.out_dir, "Output directory (overrides run.output_dir)");
    cmd->add_option("--threads", opts.threads, "Worker threads, 0 = auto");
    cmd->add_option("--seed", opts.seed, "Reserved for future stochastic models");
  }
  cmd->add_flag("-v,--verbose", opts.verbosity, "Progress output on stderr");
}

mlsn::SweepConfig load(const CommonOpts& opts) {
  mlsn::SweepConfig config = mlsn::load_config(opts.config_path, opts.overrides);
  if (!opts.scenario_filter.empty()) config.enabled_scenarios = opts.scenario_filter;
  if (!opts.out_dir.empty()) config.output_dir = opts.out_dir;
  if (opts.threads >= 0) config.threads = opts.threads;
  config.validate();
  return config;
}

int cmd_run(const CommonOpts& opts) {
  const mlsn::SweepConfig config = load(opts);
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.verbosity > 0)
    std::cerr << "sweep: " << config.epoch_count() << " epochs x " << config.walker.total()
              << " destinations x " << config.enabled_scenarios.size() << " scenarios\n";
  const auto results = mlsn::run_sweep(config);
  const auto stats = mlsn::aggregate(results, config);
  mlsn::export_outputs(results, stats, config, config.output_dir);
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "epochs " << stats.epochs << ", destinations " << stats.destinations
            << ", no-contact epochs " << stats.no_contact_epochs << " ("
            << mlsn::format_double(stats.no_contact_epoch_fraction) << ")\n";
  for (const auto& sc : stats.scenarios) {
    std::printf("%s  LLM mean latency %10.6f ms  reliability %.6f  hops %6.3f  path %.4e m\n",
                sc.scenario.c_str(), sc.llm.mean_latency_s * 1e3, sc.llm.mean_reliability,
                sc.llm.mean_relay_hops, sc.llm.mean_path_length_m);
    std::printf("%s  GLM mean latency %10.6f ms  reliability %.6f  hops %6.3f  path %.4e m\n",
                sc.scenario.c_str(), sc.glm.mean_latency_s * 1e3, sc.glm.mean_reliability,
                sc.glm.mean_relay_hops, sc.glm.mean_path_length_m);
  }
  std::cout << "wrote " << config.output_dir << " in " << mlsn::format_double(elapsed) << " s\n";
  return 0;
}

int cmd_access_report(const CommonOpts& opts) {
  const mlsn::SweepConfig config = load(opts);
  const std::string path = config.output_dir + "/access_report.csv";
  mlsn::write_access_report_csv(config, path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_validate(const CommonOpts& opts) {
  load(opts);
  std::cout << "OK: " << opts.config_path << "\n";
  return 0;
}

struct FrameOpts {
  unsigned version = 0;
  unsigned scid = 0;
  unsigned vcid = 0;
  unsigned seq = 0;
  bool bypass = false;
  bool ctrl = false;
  bool no_fecf = false;
  std::string payload_hex;
  std::string frame_hex;
};

int cmd_frame_encode(const FrameOpts& f) {
  const auto payload = mlsn::from_hex(f.payload_hex);
  mlsn::TcFrameHeader h;
  h.version = static_cast<std::uint8_t>(f.version);
  h.bypass_flag = f.bypass;
  h.control_command_flag = f.ctrl;
  h.spacecraft_id = static_cast<std::uint16_t>(f.scid);
  h.virtual_channel_id = static_cast<std::uint8_t>(f.vcid);
  h.frame_sequence_number = static_cast<std::uint8_t>(f.seq);
  h.frame_length_field = static_cast<std::uint16_t>(
      mlsn::TcFrameHeader::encoded_bytes + payload.size() + (f.no_fecf ? 0 : 2) - 1);
  const auto frame = mlsn::encode_tc_frame(h, payload, !f.no_fecf);
  std::cout << mlsn::to_hex(frame) << "\n";
  return 0;
}

int cmd_frame_decode(const FrameOpts& f) {
  std::string hex = f.frame_hex;
  if (hex.empty()) std::getline(std::cin, hex);
  const auto frame = mlsn::from_hex(hex);
  const auto d = mlsn::decode_tc_frame(frame, !f.no_fecf);
  std::cout << "version " << unsigned(d.header.version) << "\nbypass "
            << (d.header.bypass_flag ? 1 : 0) << "\nctrl "
            << (d.header.control_command_flag ? 1 : 0) << "\nscid " << d.header.spacecraft_id
            << "\nvcid " << unsigned(d.header.virtual_channel_id) << "\nlength "
            << d.header.frame_length_field + 1 << "\nseq "
            << unsigned(d.header.frame_sequence_number) << "\npayload "
            << mlsn::to_hex(d.payload) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-layer satellite network TC mission simulator"};
  app.require_subcommand(1);

  CommonOpts run_opts, access_opts, validate_opts;
  FrameOpts frame_opts;

  CLI::App* run = app.add_subcommand("run", "Run the mission sweep and write results");
  add_common(run, run_opts, true);

  CLI::App* access =
      app.add_subcommand("access-report", "Per-satellite access fractions from the ground station");
  add_common(access, access_opts, true);

  CLI::App* validate = app.add_subcommand("validate-config", "Check a config without running");
  add_common(validate, validate_opts, false);

  CLI::App* frame = app.add_subcommand("frame-tool", "TC transfer frame codec utilities");
  frame->require_subcommand(1);
  CLI::App* enc = frame->add_subcommand("encode", "Build a frame, print lowercase hex");
  enc->add_option("--version", frame_opts.version, "Version bits (default 0)");
  enc->add_option("--scid", frame_opts.scid, "Spacecraft id (10 bits)");
  enc->add_option("--vcid", frame_opts.vcid, "Virtual channel id (6 bits)");
  enc->add_option("--seq", frame_opts.seq, "Frame sequence number (8 bits)");
  enc->add_flag("--bypass", frame_opts.bypass, "Set the bypass (Type-B) flag");
  enc->add_flag("--ctrl", frame_opts.ctrl, "Set the control command flag");
  enc->add_option("--payload-hex", frame_opts.payload_hex, "Payload octets as hex");
  enc->add_flag("--no-fecf", frame_opts.no_fecf, "Omit the frame error control field");
  CLI::App* dec = frame->add_subcommand("decode", "Decode a hex frame, print fields");
  dec->add_option("--hex", frame_opts.frame_hex, "Frame octets as hex (stdin when omitted)");
  dec->add_flag("--no-fecf", frame_opts.no_fecf, "Frame carries no error control field");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (access->parsed()) return cmd_access_report(access_opts);
    if (validate->parsed()) return cmd_validate(validate_opts);
    if (frame->parsed()) {
      if (enc->parsed()) return cmd_frame_encode(frame_opts);
      if (dec->parsed()) return cmd_frame_decode(frame_opts);
    }
  } catch (const mlsn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mlsn::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mlsn::ChecksumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
