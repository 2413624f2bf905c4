// Copyright (c) 2026 braidrl contributors
// SPDX-License-Identifier: Apache-2.0

#include "braidrl/policy.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "braidrl/kernels.hpp"

namespace braidrl {

namespace {

bool finite_all(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void write_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 4);
}

std::uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw CheckpointError("truncated checkpoint: expected 4 more bytes");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

void write_f64_array(std::ostream& os, std::span<const double> v) {
  for (double x : v) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    os.write(b, 8);
  }
}

void read_f64_array(std::istream& is, std::vector<double>& v, std::size_t count) {
  v.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw CheckpointError("truncated checkpoint: parameter array cut short");
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    v[k] = std::bit_cast<double>(bits);
  }
}

constexpr char kMagic[4] = {'B', 'R', 'P', 'N'};
constexpr std::uint32_t kFormatVersion = 1;

} // namespace

NetDims NetDims::from_grid(int strands, int slots, int actions) {
  const int input = slots + actions;
  return {input, strands * input, actions};
}

std::size_t NetDims::parameter_count() const {
  return static_cast<std::size_t>(hidden) * input + hidden +
         static_cast<std::size_t>(output) * hidden + output;
}

PolicyNet PolicyNet::init(NetDims dims, std::string config_digest, Rng& rng) {
  if (dims.input < 1 || dims.hidden < 1 || dims.output < 1) {
    throw std::invalid_argument("network layers must be non-empty");
  }
  PolicyNet net;
  net.dims = dims;
  net.config_digest = std::move(config_digest);
  const double bound1 = std::sqrt(6.0 / (dims.input + dims.hidden));
  const double bound2 = std::sqrt(6.0 / (dims.hidden + dims.output));
  net.w1.resize(static_cast<std::size_t>(dims.hidden) * dims.input);
  net.b1.assign(static_cast<std::size_t>(dims.hidden), 0.0);
  net.w2.resize(static_cast<std::size_t>(dims.output) * dims.hidden);
  net.b2.assign(static_cast<std::size_t>(dims.output), 0.0);
  for (double& w : net.w1) w = rng.uniform_symmetric(bound1);
  for (double& w : net.w2) w = rng.uniform_symmetric(bound2);
  return net;
}

bool PolicyNet::all_finite() const {
  return finite_all(w1) && finite_all(b1) && finite_all(w2) && finite_all(b2);
}

ActionDistribution forward(const PolicyNet& net, std::span<const double> x,
                           std::span<const std::uint8_t> mask) {
  const auto& d = net.dims;
  if (static_cast<int>(x.size()) != d.input) {
    throw std::invalid_argument("feature vector length does not match net input size");
  }
  if (static_cast<int>(mask.size()) != d.output) {
    throw std::invalid_argument("mask length does not match net output size");
  }

  std::vector<double> h(static_cast<std::size_t>(d.hidden));
  kernels::gemv(net.w1.data(), x.data(), h.data(), d.hidden, d.input);
  for (int r = 0; r < d.hidden; ++r) {
    h[r] += net.b1[r];
    if (h[r] < 0.0) h[r] = 0.0;
  }

  std::vector<double> logits(static_cast<std::size_t>(d.output));
  kernels::gemv(net.w2.data(), h.data(), logits.data(), d.output, d.hidden);

  double max_logit = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < d.output; ++j) {
    logits[j] += net.b2[j];
    if (mask[j] && logits[j] > max_logit) max_logit = logits[j];
  }
  if (max_logit == -std::numeric_limits<double>::infinity()) {
    throw std::logic_error("forward called with an all-zero mask");
  }

  ActionDistribution dist;
  dist.probs.assign(static_cast<std::size_t>(d.output), 0.0);
  double total = 0.0;
  for (int j = 0; j < d.output; ++j) {
    if (!mask[j]) continue;
    const double e = std::exp(logits[j] - max_logit);
    dist.probs[j] = e;
    total += e;
  }
  const double inv = 1.0 / total;
  for (int j = 0; j < d.output; ++j) dist.probs[j] *= inv;
  return dist;
}

int select_greedy(const ActionDistribution& d) {
  int best = -1;
  double best_p = -1.0;
  for (std::size_t j = 0; j < d.probs.size(); ++j) {
    if (d.probs[j] > best_p) {
      best_p = d.probs[j];
      best = static_cast<int>(j);
    }
  }
  return best;
}

int select_sample(const ActionDistribution& d, Rng& rng) {
  const double u = rng.uniform_real();
  double cum = 0.0;
  int last_valid = -1;
  for (std::size_t j = 0; j < d.probs.size(); ++j) {
    if (d.probs[j] <= 0.0) continue;
    last_valid = static_cast<int>(j);
    cum += d.probs[j];
    if (u < cum) return last_valid;
  }
  return last_valid; // rounding left u >= cum; take the final valid entry
}

Gradients::Gradients(const NetDims& dims)
    : w1(static_cast<std::size_t>(dims.hidden) * dims.input, 0.0),
      b1(static_cast<std::size_t>(dims.hidden), 0.0),
      w2(static_cast<std::size_t>(dims.output) * dims.hidden, 0.0),
      b2(static_cast<std::size_t>(dims.output), 0.0) {}

void Gradients::clear() {
  std::fill(w1.begin(), w1.end(), 0.0);
  std::fill(b1.begin(), b1.end(), 0.0);
  std::fill(w2.begin(), w2.end(), 0.0);
  std::fill(b2.begin(), b2.end(), 0.0);
}

bool Gradients::all_finite() const {
  return finite_all(w1) && finite_all(b1) && finite_all(w2) && finite_all(b2);
}

void accumulate_policy_gradient(const PolicyNet& net, const EpisodeTrace& trace,
                                std::span<const double> returns, double baseline,
                                Gradients& grads) {
  const auto& d = net.dims;
  if (returns.size() != trace.steps.size()) {
    throw std::invalid_argument("one return per trace step required");
  }

  std::vector<double> pre(static_cast<std::size_t>(d.hidden));
  std::vector<double> h(static_cast<std::size_t>(d.hidden));
  std::vector<double> logits(static_cast<std::size_t>(d.output));
  std::vector<double> probs(static_cast<std::size_t>(d.output));
  std::vector<double> dlogits(static_cast<std::size_t>(d.output));
  std::vector<double> dh(static_cast<std::size_t>(d.hidden));

  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const TraceStep& step = trace.steps[t];
    const double coeff = returns[t] - baseline;
    if (coeff == 0.0) continue;

    // Recompute the forward pass; parameters are frozen within an iteration,
    // so this reproduces the distribution the action was drawn from.
    kernels::gemv(net.w1.data(), step.features.data(), pre.data(), d.hidden, d.input);
    for (int r = 0; r < d.hidden; ++r) {
      pre[r] += net.b1[r];
      h[r] = pre[r] > 0.0 ? pre[r] : 0.0;
    }
    kernels::gemv(net.w2.data(), h.data(), logits.data(), d.output, d.hidden);

    double max_logit = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < d.output; ++j) {
      logits[j] += net.b2[j];
      if (step.mask[j] && logits[j] > max_logit) max_logit = logits[j];
    }
    double total = 0.0;
    for (int j = 0; j < d.output; ++j) {
      probs[j] = 0.0;
      if (step.mask[j]) {
        probs[j] = std::exp(logits[j] - max_logit);
        total += probs[j];
      }
    }
    const double inv = 1.0 / total;

    // d(-coeff * log pi[a]) / dlogit_j = coeff * (pi_j - [j == a]) on valid j.
    for (int j = 0; j < d.output; ++j) {
      dlogits[j] = step.mask[j] ? coeff * probs[j] * inv : 0.0;
    }
    dlogits[step.action_id] -= coeff;

    for (int j = 0; j < d.output; ++j) grads.b2[j] += dlogits[j];
    kernels::ger_accum(grads.w2.data(), dlogits.data(), h.data(), d.output, d.hidden);

    std::fill(dh.begin(), dh.end(), 0.0);
    kernels::gemv_t_accum(net.w2.data(), dlogits.data(), dh.data(), d.output, d.hidden);
    kernels::active().relu_grad(pre.data(), dh.data(), static_cast<std::size_t>(d.hidden));

    for (int r = 0; r < d.hidden; ++r) grads.b1[r] += dh[r];
    kernels::ger_accum(grads.w1.data(), dh.data(), step.features.data(), d.hidden, d.input);
  }
}

AdamState::AdamState(const NetDims& dims)
    : m_w1(static_cast<std::size_t>(dims.hidden) * dims.input, 0.0), v_w1(m_w1),
      m_b1(static_cast<std::size_t>(dims.hidden), 0.0), v_b1(m_b1),
      m_w2(static_cast<std::size_t>(dims.output) * dims.hidden, 0.0), v_w2(m_w2),
      m_b2(static_cast<std::size_t>(dims.output), 0.0), v_b2(m_b2) {}

void adam_step(PolicyNet& net, const Gradients& grads, AdamState& state, double lr) {
  if (!grads.all_finite()) {
    throw std::runtime_error("non-finite policy gradient at adam step " +
                             std::to_string(state.step_count + 1));
  }
  constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  ++state.step_count;
  const double inv_bc1 = 1.0 / (1.0 - std::pow(beta1, static_cast<double>(state.step_count)));
  const double inv_bc2 = 1.0 / (1.0 - std::pow(beta2, static_cast<double>(state.step_count)));
  const auto& k = kernels::active();
  k.adam_step(net.w1.data(), state.m_w1.data(), state.v_w1.data(), grads.w1.data(),
              net.w1.size(), lr, beta1, beta2, eps, inv_bc1, inv_bc2);
  k.adam_step(net.b1.data(), state.m_b1.data(), state.v_b1.data(), grads.b1.data(),
              net.b1.size(), lr, beta1, beta2, eps, inv_bc1, inv_bc2);
  k.adam_step(net.w2.data(), state.m_w2.data(), state.v_w2.data(), grads.w2.data(),
              net.w2.size(), lr, beta1, beta2, eps, inv_bc1, inv_bc2);
  k.adam_step(net.b2.data(), state.m_b2.data(), state.v_b2.data(), grads.b2.data(),
              net.b2.size(), lr, beta1, beta2, eps, inv_bc1, inv_bc2);
}

std::string policy_config_digest(const ActionTable& table, Encoding encoding) {
  return table.layout_digest() +
         (encoding == Encoding::scaled ? ";encoding=scaled" : ";encoding=raw") +
         (table.insertion_enabled() ? ";insertion=on" : ";insertion=off");
}

void save_checkpoint(const PolicyNet& net, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw CheckpointError("cannot open " + path.string() + " for writing");

  // The grid parameters live in the digest string; store the numeric fields
  // explicitly too so loaders can rebuild the table without parsing it.
  nlohmann::ordered_json header;
  header["input"] = net.dims.input;
  header["hidden"] = net.dims.hidden;
  header["output"] = net.dims.output;
  header["digest"] = net.config_digest;
  const std::string header_str = header.dump();

  os.write(kMagic, 4);
  write_u32(os, kFormatVersion);
  write_u32(os, static_cast<std::uint32_t>(header_str.size()));
  os.write(header_str.data(), static_cast<std::streamsize>(header_str.size()));
  write_f64_array(os, net.w1);
  write_f64_array(os, net.b1);
  write_f64_array(os, net.w2);
  write_f64_array(os, net.b2);
  if (!os) throw CheckpointError("write failed for " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw CheckpointError("cannot open " + path.string());

  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw CheckpointError(path.string() + " is not a policy checkpoint");
  }
  const std::uint32_t version = read_u32(is);
  if (version != kFormatVersion) {
    throw CheckpointError("unsupported checkpoint format version " + std::to_string(version));
  }
  const std::uint32_t header_len = read_u32(is);
  std::string header_str(header_len, '\0');
  is.read(header_str.data(), header_len);
  if (!is) throw CheckpointError("truncated checkpoint header");

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_str);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("bad checkpoint header: ") + e.what());
  }

  Checkpoint ckpt;
  try {
    ckpt.net.dims.input = header.at("input").get<int>();
    ckpt.net.dims.hidden = header.at("hidden").get<int>();
    ckpt.net.dims.output = header.at("output").get<int>();
    ckpt.net.config_digest = header.at("digest").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("bad checkpoint header: ") + e.what());
  }

  const std::string& digest = ckpt.net.config_digest;
  auto field = [&](const std::string& key) -> std::string {
    const std::string marker = ";" + key + "=";
    const auto pos = digest.find(marker);
    if (pos == std::string::npos) throw CheckpointError("digest missing field " + key);
    const auto start = pos + marker.size();
    const auto end = digest.find(';', start);
    return digest.substr(start, end == std::string::npos ? std::string::npos : end - start);
  };
  ckpt.strands = std::stoi(field("n"));
  ckpt.slots = std::stoi(field("L"));
  ckpt.insertion_enabled = field("insertion") == "on";
  ckpt.encoding = field("encoding") == "raw" ? Encoding::raw : Encoding::scaled;

  const auto& d = ckpt.net.dims;
  if (d.input < 1 || d.hidden < 1 || d.output < 1) {
    throw CheckpointError("checkpoint header has non-positive dimensions");
  }
  read_f64_array(is, ckpt.net.w1, static_cast<std::size_t>(d.hidden) * d.input);
  read_f64_array(is, ckpt.net.b1, static_cast<std::size_t>(d.hidden));
  read_f64_array(is, ckpt.net.w2, static_cast<std::size_t>(d.output) * d.hidden);
  read_f64_array(is, ckpt.net.b2, static_cast<std::size_t>(d.output));
  is.peek();
  if (!is.eof()) throw CheckpointError("trailing bytes after checkpoint parameters");
  return ckpt;
}

} // namespace braidrl
