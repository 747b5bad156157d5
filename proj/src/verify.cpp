#include "cycubic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cycubic/eisenstein.hpp"
#include "cycubic/groupring.hpp"

namespace cycubic {

bool ConductorReport::all_pass() const {
  return !failure && std::all_of(fields.begin(), fields.end(), [](const FieldRecord& r) { return r.all_pass(); });
}

double ConductorReport::max_residual() const {
  double r = 0.0;
  for (const auto& rec : fields) r = std::max(r, rec.max_residual());
  return r;
}

std::string ConductorReport::first_failure() const {
  const std::string head = "conductor " + std::to_string(conductor.value) + ": ";
  if (failure) return head + std::string(to_string(failure->kind)) + ": " + failure->message;
  for (const auto& rec : fields) {
    for (const auto& [name, v] : rec.verdicts) {
      if (!v.passed) return head + "M = " + rec.representation.M.get_str() + ", " + name + ": " + v.detail;
    }
  }
  return {};
}

Verdict verify_character_kernel(const FieldRecord& rec, double tolerance) {
  const CharacterConstruction cc = character_for_representation(rec.representation, tolerance);
  if (!cc.chi.same_kernel(*rec.kernel.character)) {
    return Verdict::fail("character_kernel", "kernel of the constructed character differs from the matched kernel",
                         cc.normalization_residual);
  }
  std::string detail;
  if (cc.tau9) {
    detail = cc.tau9_cubed_equals_27_zeta ? "tau(chi_9)^3 = 27 zeta^(+-1)" : "tau(chi_9)^3 != 27 zeta^(+-1)";
    if (!cc.tau9_cubed_equals_27_zeta) {
      return Verdict::fail("character_kernel", detail, cc.normalization_residual);
    }
  }
  return Verdict::pass("character_kernel", cc.normalization_residual, detail);
}

ConductorReport verify_conductor(const Conductor& f, double tolerance) {
  ConductorReport report;
  report.conductor = f;
  if (f.nu() == 0) {
    report.notes.push_back("nu = 0: mu(f/9) = mu(1) = 1 and the product over p_i is empty");
  }
  try {
    report.fields = match_fields(f, tolerance);
    for (auto& rec : report.fields) {
      if (f.is_wild()) {
        rec.add(verify_sign_congruences(rec));
        rec.add(verify_generators(rec, tolerance));
        rec.add(verify_unit_action(rec, tolerance));
      }
      try {
        rec.add(verify_character_kernel(rec, tolerance));
      } catch (const Error& e) {
        rec.add(Verdict::fail("character_kernel", e.what(), 1.0));
      }
    }
  } catch (const Error& e) {
    report.fields.clear();
    report.failure = PipelineFailure{e.kind(), e.message()};
  }
  return report;
}

std::vector<ConductorReport> verify_conductors(const std::vector<Conductor>& conductors, double tolerance,
                                               unsigned threads) {
  std::vector<ConductorReport> out(conductors.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(conductors.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < conductors.size(); i = next++) out[i] = verify_conductor(conductors[i], tolerance);
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

}  // namespace cycubic
