#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "maschke/counting/counting.hpp"

namespace maschke::counting {

namespace {

using Key = std::tuple<int, std::uint32_t, unsigned>;

Key key_of(VarietyId id, std::uint32_t p, unsigned k) { return {static_cast<int>(id), p, k}; }

nlohmann::json to_json(const CountRecord& r) {
  return {{"variety", to_string(r.id)}, {"p", r.p}, {"k", r.k}, {"q", r.q},
          {"count", r.count}, {"kernel", to_string(r.kernel)}, {"ms", r.ms}};
}

std::map<Key, CountRecord> load_checkpoint(const std::string& path) {
  std::map<Key, CountRecord> done;
  if (path.empty() || !std::filesystem::exists(path)) return done;
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot read checkpoint " + path);
  try {
    const auto doc = nlohmann::json::parse(in);
    for (const auto& row : doc.at("completed")) {
      auto id = parse_variety(row.at("variety").get<std::string>());
      auto kernel = parse_kernel(row.at("kernel").get<std::string>());
      if (!id || !kernel) throw CheckpointError("unknown variety or kernel in checkpoint " + path);
      CountRecord r{*id, row.at("p").get<std::uint32_t>(), row.at("k").get<unsigned>(), row.at("q").get<std::uint64_t>(),
                    row.at("count").get<std::int64_t>(), *kernel, row.at("ms").get<double>()};
      done[key_of(r.id, r.p, r.k)] = r;
    }
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("malformed checkpoint " + path + ": " + e.what());
  }
  return done;
}

void save_checkpoint(const std::string& path, const std::map<Key, CountRecord>& done) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, r] : done) rows.push_back(to_json(r));
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
    out << nlohmann::json{{"completed", rows}}.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<CountRecord> run_sweep(const std::vector<SweepTask>& tasks, const SweepOptions& opt) {
  std::map<Key, CountRecord> done = load_checkpoint(opt.checkpoint);
  std::vector<CountRecord> out(tasks.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto it = done.find(key_of(tasks[i].id, tasks[i].p, tasks[i].k));
    if (it != done.end())
      out[i] = it->second;
    else
      todo.push_back(i);
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= todo.size()) return;
      const SweepTask& t = tasks[todo[slot]];
      try {
        CountRecord r = count_points(t.id, ffield::build_ext(t.p, t.k), opt.kernel, 1);
        std::lock_guard lock(mu);
        out[todo[slot]] = r;
        done[key_of(t.id, t.p, t.k)] = r;
        if (!opt.checkpoint.empty()) save_checkpoint(opt.checkpoint, done);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = todo.size();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(todo.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_counts_csv(std::ostream& out, const std::vector<CountRecord>& rows, bool with_timing) {
  out << "variety,p,k,q,count,kernel,ms\n";
  for (const auto& r : rows) {
    out << to_string(r.id) << ',' << r.p << ',' << r.k << ',' << r.q << ',' << r.count << ',' << to_string(r.kernel) << ',';
    if (with_timing) out << static_cast<std::int64_t>(r.ms + 0.5);
    out << '\n';
  }
}

}  // namespace maschke::counting
