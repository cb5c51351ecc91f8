// Copyright 2026 The petzlab Authors
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

#include "petzlab/serialize.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

namespace petzlab {

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

void put_le(std::vector<std::uint8_t>& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

double get_le(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(operator_to_json(m));
  return a;
}

std::vector<Matrix> matrices_from_json(const Json& j) {
  std::vector<Matrix> out;
  for (const auto& e : j) out.push_back(operator_from_json(e));
  return out;
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  if (i < bytes.size()) {
    std::uint32_t v = bytes[i] << 16;
    if (i + 1 < bytes.size()) v |= bytes[i + 1] << 8;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += i + 1 < bytes.size() ? kAlphabet[(v >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) throw Error(ErrorKind::kIoFailure, "base64 length not a multiple of 4");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::array<int, 4> v{};
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=' && i + 4 == text.size() && k >= 2) {
        v[k] = 0;
        ++pad;
        continue;
      }
      if (pad > 0 || (v[k] = decode_char(c)) < 0) {
        throw Error(ErrorKind::kIoFailure, "invalid base64 character");
      }
    }
    const std::uint32_t word = (v[0] << 18) | (v[1] << 12) | (v[2] << 6) | v[3];
    out.push_back(static_cast<std::uint8_t>(word >> 16));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>(word >> 8));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(word));
  }
  return out;
}

Json operator_to_json(const Matrix& m) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(static_cast<std::size_t>(m.size()) * 16);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put_le(bytes, m(r, c).real());
      put_le(bytes, m(r, c).imag());
    }
  }
  Json j;
  if (m.rows() == m.cols()) j["dim"] = m.rows();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = base64_encode(bytes);
  return j;
}

Matrix operator_from_json(const Json& j) {
  try {
    const auto rows = j.contains("rows") ? j.at("rows").get<Eigen::Index>() : j.at("dim").get<Eigen::Index>();
    const auto cols = j.contains("cols") ? j.at("cols").get<Eigen::Index>() : rows;
    const auto bytes = base64_decode(j.at("data").get<std::string>());
    if (bytes.size() != static_cast<std::size_t>(rows * cols * 16)) {
      throw Error(ErrorKind::kIoFailure, "operator payload has the wrong length");
    }
    Matrix m(rows, cols);
    const std::uint8_t* p = bytes.data();
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c, p += 16) m(r, c) = Complex(get_le(p), get_le(p + 8));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoFailure, std::string("malformed operator: ") + e.what());
  }
}

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw Error(ErrorKind::kIoFailure, "unexpected real '" + s + "'");
  }
  return j.get<double>();
}

Json to_json(const RotationWitness& w) {
  Json j;
  j["u_out"] = operator_to_json(w.u_out);
  j["v_in"] = operator_to_json(w.v_in);
  j["achieved_root_fidelity"] = real_to_json(w.achieved_root_fidelity);
  j["certified"] = w.certified;
  j["best_restart"] = w.best_restart;
  Json trace = Json::array();
  for (const auto& t : w.optimizer_trace) {
    trace.push_back({t.restart_index, t.iterations, real_to_json(t.best_value)});
  }
  j["optimizer_trace"] = std::move(trace);
  return j;
}

RotationWitness witness_from_json(const Json& j) {
  RotationWitness w;
  w.u_out = operator_from_json(j.at("u_out"));
  w.v_in = operator_from_json(j.at("v_in"));
  w.achieved_root_fidelity = real_from_json(j.at("achieved_root_fidelity"));
  w.certified = j.at("certified").get<bool>();
  w.best_restart = j.at("best_restart").get<int>();
  for (const auto& t : j.at("optimizer_trace")) {
    w.optimizer_trace.push_back({t.at(0).get<int>(), t.at(1).get<int>(), real_from_json(t.at(2))});
  }
  return w;
}

Json to_json(const InstanceDigest& d) {
  Json j;
  j["master_seed"] = d.master_seed;
  j["sample_index"] = d.sample_index;
  j["dims"] = d.dims;
  j["sampler"] = d.sampler;
  j["version"] = d.version;
  return j;
}

InstanceDigest digest_from_json(const Json& j) {
  InstanceDigest d;
  d.master_seed = j.at("master_seed").get<std::uint64_t>();
  d.sample_index = j.at("sample_index").get<std::uint64_t>();
  d.dims = j.at("dims").get<std::vector<int>>();
  d.sampler = j.at("sampler").get<std::string>();
  d.version = j.at("version").get<std::string>();
  return d;
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["inequality_id"] = to_string(r.id);
  j["lhs"] = real_to_json(r.lhs);
  j["rhs"] = real_to_json(r.rhs);
  j["gap"] = real_to_json(r.gap);
  if (r.gap_nats) j["gap_nats"] = real_to_json(*r.gap_nats);
  j["remainder_kind"] = to_string(r.remainder_kind);
  j["remainder"] = real_to_json(r.remainder);
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["instance_digest"] = to_json(r.digest);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

InequalityReport report_from_json(const Json& j) {
  try {
    InequalityReport r;
    r.id = parse_inequality_id(j.at("inequality_id").get<std::string>());
    r.lhs = real_from_json(j.at("lhs"));
    r.rhs = real_from_json(j.at("rhs"));
    r.gap = real_from_json(j.at("gap"));
    if (j.contains("gap_nats")) r.gap_nats = real_from_json(j.at("gap_nats"));
    r.remainder_kind = parse_remainder_kind(j.at("remainder_kind").get<std::string>());
    r.remainder = real_from_json(j.at("remainder"));
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
    r.digest = digest_from_json(j.at("instance_digest"));
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoFailure, std::string("malformed report: ") + e.what());
  }
}

Json to_json(const Instance& inst) {
  Json j;
  j["family"] = inst.family;
  Json shape = Json::array();
  for (const auto& f : inst.shape.factors()) shape.push_back({f.label, f.dim});
  j["shape"] = std::move(shape);
  if (inst.rho) j["rho"] = operator_to_json(*inst.rho);
  if (inst.sigma) j["sigma"] = operator_to_json(*inst.sigma);
  if (!inst.probs.empty()) {
    Json p = Json::array();
    for (double v : inst.probs) p.push_back(real_to_json(v));
    j["probs"] = std::move(p);
  }
  if (!inst.rho_members.empty()) j["rho_members"] = matrices_to_json(inst.rho_members);
  if (!inst.sigma_members.empty()) j["sigma_members"] = matrices_to_json(inst.sigma_members);
  if (!inst.kraus.empty()) j["kraus"] = matrices_to_json(inst.kraus);
  if (!inst.operators.empty()) j["operators"] = matrices_to_json(inst.operators);
  return j;
}

Instance instance_from_json(const Json& j) {
  try {
    Instance inst;
    inst.family = j.at("family").get<std::string>();
    std::vector<SpaceShape::Factor> factors;
    for (const auto& f : j.at("shape")) factors.push_back({f.at(0).get<std::string>(), f.at(1).get<int>()});
    inst.shape = SpaceShape(std::move(factors));
    if (j.contains("rho")) inst.rho = operator_from_json(j.at("rho"));
    if (j.contains("sigma")) inst.sigma = operator_from_json(j.at("sigma"));
    if (j.contains("probs")) {
      for (const auto& p : j.at("probs")) inst.probs.push_back(real_from_json(p));
    }
    if (j.contains("rho_members")) inst.rho_members = matrices_from_json(j.at("rho_members"));
    if (j.contains("sigma_members")) inst.sigma_members = matrices_from_json(j.at("sigma_members"));
    if (j.contains("kraus")) inst.kraus = matrices_from_json(j.at("kraus"));
    if (j.contains("operators")) inst.operators = matrices_from_json(j.at("operators"));
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kIoFailure, std::string("malformed instance: ") + e.what());
  }
}

}  // namespace petzlab
