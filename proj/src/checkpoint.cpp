#include "zk/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "zk/error.hpp"

namespace zk {

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'Z', 'K', 'G', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::string& path, const char* what) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) {
    std::ostringstream msg;
    msg << "checkpoint " << path << ": file truncated while reading " << what;
    throw ContractError(msg.str());
  }
  return value;
}

void put_field(std::ostream& out, const Field& f) {
  out.write(reinterpret_cast<const char*>(f.values().data()),
            static_cast<std::streamsize>(f.size() * sizeof(cplx)));
}

void get_field(std::istream& in, Field& f, const std::string& path, const char* name) {
  const auto bytes = static_cast<std::streamsize>(f.size() * sizeof(cplx));
  in.read(reinterpret_cast<char*>(f.values().data()), bytes);
  if (in.gcount() != bytes) {
    std::ostringstream msg;
    msg << "checkpoint " << path << ": shape mismatch in array " << name << " (expected " << bytes
        << " bytes, found " << in.gcount() << ")";
    throw ContractError(msg.str());
  }
}

}  // namespace

void write_checkpoint(const State& state, double gamma, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path);
  const Grid& g = state.grid();
  out.write(kMagic, 4);
  put<std::uint32_t>(out, kCheckpointVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.n()));
  put<double>(out, g.length());
  put<double>(out, state.t);
  put<double>(out, gamma);
  put<std::uint64_t>(out, state.step_count);
  put_field(out, state.fhat);
  put_field(out, state.gplus_hat);
  put_field(out, state.fplus_hat);
  put_field(out, state.fminus_hat);
  put_field(out, state.gacc_hat);
  out.flush();
  if (!out) throw IoError("failed writing checkpoint: " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint: " + path);
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw ContractError("checkpoint " + path + ": bad magic (expected ZKG1)");
  auto version = get<std::uint32_t>(in, path, "version");
  if (version != kCheckpointVersion) {
    std::ostringstream msg;
    msg << "checkpoint " << path << ": version mismatch (expected " << kCheckpointVersion
        << ", found " << version << ")";
    throw ContractError(msg.str());
  }
  auto dim = get<std::uint32_t>(in, path, "dim");
  auto n = get<std::uint32_t>(in, path, "n");
  auto L = get<double>(in, path, "L");
  auto t = get<double>(in, path, "t");
  auto gamma = get<double>(in, path, "gamma");
  auto steps = get<std::uint64_t>(in, path, "step_count");

  Grid grid = [&] {
    try {
      return Grid(static_cast<int>(dim), static_cast<int>(n), L);
    } catch (const ContractError& e) {
      std::ostringstream msg;
      msg << "checkpoint " << path << ": shape mismatch, header describes an invalid grid (" << e.what() << ")";
      throw ContractError(msg.str());
    }
  }();
  Checkpoint cp{State(grid), gamma};
  cp.state.t = t;
  cp.state.step_count = steps;
  get_field(in, cp.state.fhat, path, "fhat");
  get_field(in, cp.state.gplus_hat, path, "gplus_hat");
  get_field(in, cp.state.fplus_hat, path, "fplus_hat");
  get_field(in, cp.state.fminus_hat, path, "fminus_hat");
  get_field(in, cp.state.gacc_hat, path, "gacc_hat");
  if (in.peek() != std::char_traits<char>::eof())
    throw ContractError("checkpoint " + path + ": shape mismatch, trailing bytes after the last array");
  return cp;
}

}  // namespace zk
