// Copyright 2026 The qdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdenoise/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "qdenoise/errors.hpp"

namespace qdenoise::harness {
namespace {

struct RuleParams {
  std::optional<encoding::ThresholdRule::Kind> kind;
  int tau_min = 1;
  int tau_max = 3;
  std::optional<int> tau_reference;
  int tau = 0;
  std::vector<int> table;
};

// Denoiser settings before the threshold rule is materialized; a scenario
// can change `a` after the global section set tau_reference defaults.
struct Draft {
  pipeline::DenoiseConfig config;
  RuleParams rule;
};

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

struct NamedNoise {
  std::string_view name;
  noise::NoiseSpec noise;
};

std::vector<NamedNoise> default_scenarios() {
  const noise::Awgn awgn{15.0};
  const noise::Poisson poisson{30.0};
  std::vector<NamedNoise> list(6);
  list[0].name = "awgn";
  list[0].noise.classical = awgn;
  list[1].name = "phase";
  list[1].noise.phase_epsilon = 0.1;
  list[2].name = "mixed";
  list[2].noise.classical = awgn;
  list[2].noise.phase_epsilon = 0.1;
  list[3].name = "bitflip";
  list[3].noise.bit_flip = 0.05;
  list[3].noise.phase_epsilon = 0.1;
  list[4].name = "poisson";
  list[4].noise.classical = poisson;
  list[5].name = "poisson-phase";
  list[5].noise.classical = poisson;
  list[5].noise.phase_epsilon = 0.1;
  return list;
}

std::pair<ExperimentConfig, Draft> profile_parts(std::string_view profile) {
  ExperimentConfig exp;
  Draft draft;
  exp.profile = std::string(profile);
  auto& cfg = draft.config;
  if (profile == "smoke") {
    cfg.m = 3;
    cfg.p = 2;
    cfg.a = 4;
    cfg.b = 3;
    cfg.backend = pipeline::Backend::full;
    draft.rule.tau_min = 1;
    draft.rule.tau_max = 2;
    exp.trials = 8;
  } else if (profile == "desk" || profile == "full") {
    cfg.m = 5;
    cfg.p = 5;
    cfg.a = 8;
    cfg.b = 5;
    cfg.backend = pipeline::Backend::compact;
    draft.rule.tau_min = 1;
    draft.rule.tau_max = 3;
    exp.trials = profile == "full" ? 200 : 50;
  } else {
    throw ConfigError("unknown profile '" + std::string(profile) + "' (smoke, desk, full)");
  }
  draft.rule.kind = encoding::ThresholdRule::Kind::linear;
  return {std::move(exp), std::move(draft)};
}

encoding::ThresholdRule build_rule(const Draft& draft) {
  const auto& r = draft.rule;
  if (!r.kind) return encoding::ThresholdRule::default_for(draft.config.m, draft.config.a);
  switch (*r.kind) {
    case encoding::ThresholdRule::Kind::linear:
      return encoding::ThresholdRule::linear(r.tau_min, r.tau_max,
                                             r.tau_reference.value_or(1 << (draft.config.a - 1)));
    case encoding::ThresholdRule::Kind::constant:
      return encoding::ThresholdRule::constant(r.tau);
    case encoding::ThresholdRule::Kind::table:
      return encoding::ThresholdRule::table(r.table);
  }
  throw ConfigError("unknown threshold rule");
}

pipeline::DenoiseConfig finish(const Draft& draft) {
  auto cfg = draft.config;
  try {
    cfg.threshold_rule = build_rule(draft);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("threshold rule: ") + e.what());
  }
  return cfg;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    auto item = trim(value.substr(start, end - start));
    if (!item.empty()) items.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

class Context {
 public:
  Context(std::string_view source, const Entry& entry) : source_(source), entry_(entry) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(source_ + ":" + std::to_string(entry_.line) + ": key '" + entry_.key +
                      "': " + what);
  }

  template <typename T>
  T number(std::string_view text) const {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
      fail("cannot parse '" + std::string(text) + "' as a number");
    }
    return value;
  }
  template <typename T>
  T number() const {
    return number<T>(entry_.value);
  }

  template <typename Fn>
  auto wrap(Fn&& fn) const {
    try {
      return fn(entry_.value);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  const Entry& entry() const { return entry_; }

 private:
  std::string source_;
  const Entry& entry_;
};

bool apply_denoise_key(const Context& ctx, Draft& draft) {
  auto& cfg = draft.config;
  const auto& key = ctx.entry().key;
  const auto& value = ctx.entry().value;
  if (key == "m") {
    cfg.m = ctx.number<int>();
  } else if (key == "p") {
    cfg.p = ctx.number<int>();
  } else if (key == "a") {
    cfg.a = ctx.number<int>();
  } else if (key == "b") {
    cfg.b = ctx.number<int>();
  } else if (key == "threshold_rule") {
    if (value == "linear") {
      draft.rule.kind = encoding::ThresholdRule::Kind::linear;
    } else if (value == "constant") {
      draft.rule.kind = encoding::ThresholdRule::Kind::constant;
    } else if (value == "table") {
      draft.rule.kind = encoding::ThresholdRule::Kind::table;
    } else if (value == "default") {
      draft.rule.kind.reset();
    } else {
      ctx.fail("expected linear, constant, table or default");
    }
  } else if (key == "tau_min") {
    draft.rule.tau_min = ctx.number<int>();
  } else if (key == "tau_max") {
    draft.rule.tau_max = ctx.number<int>();
  } else if (key == "tau_reference") {
    draft.rule.tau_reference = ctx.number<int>();
  } else if (key == "tau") {
    draft.rule.tau = ctx.number<int>();
  } else if (key == "tau_table") {
    draft.rule.table.clear();
    for (const auto& item : split_list(value)) draft.rule.table.push_back(ctx.number<int>(item));
  } else if (key == "oracle_mode") {
    cfg.oracle_mode = ctx.wrap([](const std::string& v) { return circuits::parse_oracle_mode(v); });
  } else if (key == "iteration_mode") {
    cfg.iteration_mode =
        ctx.wrap([](const std::string& v) { return pipeline::parse_iteration_mode(v); });
  } else if (key == "amplification") {
    cfg.amplification =
        ctx.wrap([](const std::string& v) { return pipeline::parse_amplification_mode(v); });
  } else if (key == "diffusion") {
    cfg.diffusion = ctx.wrap([](const std::string& v) { return pipeline::parse_diffusion_mode(v); });
  } else if (key == "forced_iterations") {
    if (value == "none") {
      cfg.forced_iterations.reset();
    } else {
      cfg.forced_iterations = ctx.number<int>();
    }
  } else if (key == "qwt_depth") {
    cfg.qwt_depth = ctx.wrap([](const std::string& v) { return pipeline::parse_qwt_depth(v); });
  } else if (key == "backend") {
    cfg.backend = ctx.wrap([](const std::string& v) { return pipeline::parse_backend(v); });
  } else if (key == "max_qubits") {
    cfg.max_qubits = ctx.number<int>();
  } else {
    return false;
  }
  return true;
}

// Classical noise parameters are collected first so `snr_db` may precede
// `classical` in a section.
struct NoiseDraft {
  std::optional<std::string> classical;
  double snr_db = 15.0;
  double peak_level = 30.0;
};

bool apply_noise_key(const Context& ctx, noise::NoiseSpec& spec, NoiseDraft& draft) {
  const auto& key = ctx.entry().key;
  const auto& value = ctx.entry().value;
  if (key == "classical") {
    if (value != "none" && value != "awgn" && value != "poisson") {
      ctx.fail("expected none, awgn or poisson");
    }
    draft.classical = value;
  } else if (key == "snr_db") {
    draft.snr_db = ctx.number<double>();
  } else if (key == "peak_level") {
    draft.peak_level = ctx.number<double>();
  } else if (key == "phase_epsilon") {
    if (value == "none") {
      spec.phase_epsilon.reset();
    } else {
      spec.phase_epsilon = ctx.number<double>();
    }
  } else if (key == "bit_flip") {
    if (value == "none") {
      spec.bit_flip.reset();
    } else {
      spec.bit_flip = ctx.number<double>();
    }
  } else if (key == "phase_mode") {
    if (value == "post-rotation") {
      spec.phase_mode = noise::PhaseNoiseMode::post_rotation;
    } else if (value == "perturb-angle") {
      spec.phase_mode = noise::PhaseNoiseMode::perturb_angle;
    } else {
      ctx.fail("expected post-rotation or perturb-angle");
    }
  } else {
    return false;
  }
  return true;
}

void finish_noise(const NoiseDraft& draft, noise::NoiseSpec& spec) {
  if (!draft.classical) return;
  if (*draft.classical == "none") {
    spec.classical.reset();
  } else if (*draft.classical == "awgn") {
    spec.classical = noise::Awgn{draft.snr_db};
  } else {
    spec.classical = noise::Poisson{draft.peak_level};
  }
}

std::optional<std::string> profile_key(const Section& global) {
  std::optional<std::string> found;
  for (const auto& e : global.entries) {
    if (e.key == "profile") found = e.value;
  }
  return found;
}

bool valid_scenario_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
}

}  // namespace

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (methods.empty()) throw ConfigError("methods must not be empty");
  if (keep_fractions.empty()) throw ConfigError("keep_fractions must not be empty");
  for (double keep : keep_fractions) {
    if (!(keep > 0.0 && keep <= 1.0)) throw ConfigError("keep fractions must be in (0, 1]");
  }
  if (scenarios.empty()) throw ConfigError("no scenarios");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (trace_trial < 0 || trace_trial >= trials) {
    throw ConfigError("trace_trial must be in [0, trials)");
  }
  std::set<std::string> names;
  for (const auto& s : scenarios) {
    if (!names.insert(s.name).second) throw ConfigError("duplicate scenario '" + s.name + "'");
    try {
      s.config.validate();
    } catch (const std::exception& e) {
      throw ConfigError("scenario '" + s.name + "': " + e.what());
    }
    if (s.config.length() != signal.length || s.config.window_size() != signal.window) {
      throw ConfigError("scenario '" + s.name + "' changes the signal geometry (m, p)");
    }
  }
  signal.validate();
}

ExperimentConfig profile_config(std::string_view profile) {
  std::istringstream empty;
  return parse_config(empty, "<profile>", std::string(profile));
}

ExperimentConfig parse_config(std::istream& in, std::string_view source,
                              std::optional<std::string> profile_override) {
  const std::string src(source);
  Section global;
  std::vector<Section> sections;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto here = src + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(here + "unterminated section header");
      const std::string inner = trim(std::string_view(line).substr(1, line.size() - 2));
      if (inner.rfind("scenario", 0) != 0) {
        throw ConfigError(here + "unknown section '" + inner + "' (expected [scenario NAME])");
      }
      const std::string name = trim(std::string_view(inner).substr(8));
      if (!valid_scenario_name(name)) {
        throw ConfigError(here + "scenario names use letters, digits, '-' and '_'");
      }
      for (const auto& s : sections) {
        if (s.name == name) throw ConfigError(here + "duplicate scenario '" + name + "'");
      }
      sections.push_back({name, line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(here + "expected key = value");
    Entry entry{trim(std::string_view(line).substr(0, eq)),
                trim(std::string_view(line).substr(eq + 1)), line_no};
    if (entry.key.empty()) throw ConfigError(here + "missing key");
    if (entry.value.empty()) throw ConfigError(here + "key '" + entry.key + "' has no value");
    (sections.empty() ? global : sections.back()).entries.push_back(std::move(entry));
  }

  const std::string profile = profile_override.value_or(profile_key(global).value_or("desk"));
  auto [exp, draft] = profile_parts(profile);

  for (const auto& entry : global.entries) {
    const Context ctx(src, entry);
    const auto& key = entry.key;
    const auto& value = entry.value;
    if (apply_denoise_key(ctx, draft)) continue;
    if (key == "profile") {
      if (value != "smoke" && value != "desk" && value != "full") {
        ctx.fail("unknown profile '" + value + "'");
      }
    } else if (key == "seed") {
      exp.seed = ctx.number<std::uint64_t>();
    } else if (key == "trials") {
      exp.trials = ctx.number<int>();
    } else if (key == "threads") {
      exp.threads = ctx.number<int>();
    } else if (key == "trace_trial") {
      exp.trace_trial = ctx.number<int>();
    } else if (key == "methods") {
      exp.methods.clear();
      for (const auto& item : split_list(value)) {
        exp.methods.push_back(ctx.wrap([&](const std::string&) { return pipeline::parse_method(item); }));
      }
    } else if (key == "keep_fractions") {
      exp.keep_fractions.clear();
      for (const auto& item : split_list(value)) exp.keep_fractions.push_back(ctx.number<double>(item));
    } else if (key == "signal") {
      exp.signal.kind = ctx.wrap([](const std::string& v) { return parse_signal_kind(v); });
    } else if (key == "signal_file") {
      std::filesystem::path path(value);
      if (path.is_relative() && source.front() != '<') {
        path = std::filesystem::path(src).parent_path() / path;
      }
      exp.signal.file = path;
    } else if (key == "signal_blocks") {
      exp.signal.blocks = ctx.number<std::uint64_t>();
    } else if (key == "signal_texture") {
      exp.signal.texture = ctx.number<double>();
    } else if (key == "signal_max_piece_windows") {
      exp.signal.max_piece_windows = ctx.number<int>();
    } else if (key == "signal_tones") {
      // frequency:amplitude[:phase], comma separated
      exp.signal.tones.clear();
      for (const auto& item : split_list(value)) {
        Tone tone;
        std::vector<std::string> parts;
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ':');) parts.push_back(trim(part));
        if (parts.size() < 2 || parts.size() > 3) ctx.fail("tones are frequency:amplitude[:phase]");
        tone.frequency = ctx.number<double>(parts[0]);
        tone.amplitude = ctx.number<double>(parts[1]);
        if (parts.size() == 3) tone.phase = ctx.number<double>(parts[2]);
        exp.signal.tones.push_back(tone);
      }
    } else {
      noise::NoiseSpec unused;
      NoiseDraft unused_draft;
      if (apply_noise_key(ctx, unused, unused_draft)) {
        ctx.fail("noise keys belong in a [scenario NAME] section");
      }
      ctx.fail("unknown key");
    }
  }

  exp.scenarios.clear();
  if (sections.empty()) {
    for (const auto& named : default_scenarios()) {
      auto cfg = finish(draft);
      cfg.noise = named.noise;
      exp.scenarios.push_back({std::string(named.name), std::move(cfg)});
    }
  } else {
    for (const auto& section : sections) {
      Draft local = draft;
      noise::NoiseSpec spec;
      NoiseDraft noise_draft;
      for (const auto& entry : section.entries) {
        const Context ctx(src, entry);
        if (apply_denoise_key(ctx, local)) continue;
        if (apply_noise_key(ctx, spec, noise_draft)) continue;
        ctx.fail("unknown key in scenario '" + section.name + "'");
      }
      finish_noise(noise_draft, spec);
      auto cfg = finish(local);
      cfg.noise = spec;
      exp.scenarios.push_back({section.name, std::move(cfg)});
    }
  }

  const auto& first = exp.scenarios.front().config;
  exp.signal.length = first.length();
  exp.signal.window = first.window_size();
  try {
    exp.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(src + ": " + e.what());
  }
  return exp;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<std::string> profile_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, path.string(), std::move(profile_override));
}

}  // namespace qdenoise::harness
