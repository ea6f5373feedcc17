#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digicover/map.hpp"

namespace digicover {

/// Verdicts a fixture is expected to reproduce. Unset fields are not claimed
/// (for instance, nothing past continuity is claimed for a discontinuous map).
struct ExpectedVerdicts {
  std::optional<bool> continuous;
  std::optional<bool> surjective;
  std::optional<bool> plp;
  std::optional<bool> unique_lifts;
  std::optional<bool> upl;
  std::optional<bool> conciliator_free;
  std::optional<bool> local_iso;
  std::optional<bool> covering;
  std::optional<bool> radius2_covering;
};

struct Fixture {
  std::string name;
  DigitalMap map;
  ExpectedVerdicts expected;
  /// Which verdicts depend on the finite model of an infinite example.
  std::string boundary_caveats;
  /// Domain points at distance < 2 from a truncation end; claims about
  /// "interior" behavior exclude them. Empty for cycle models.
  std::vector<Point> boundary_points;
};

/// How an infinite domain (Z or Z^+) is made finite.
enum class DomainModel {
  Line,   // the digital interval [0, len]_Z
  Cycle,  // the cycle C_len, locally identical to Z at radius 1
};

/// Projection (x, y) -> x from [0, width-1] x [-h, h] (8-adjacency, height =
/// 2h+1) onto [0, width-1]_Z (2-adjacency). Throws std::invalid_argument
/// unless width >= 3 and height >= 3 is odd.
Fixture fixture_pr1(int width = 3, int height = 5);

/// i -> c_{i mod 4} from [0, len]_Z onto SC_8^{2,4}. Requires len >= 8 and
/// len divisible by 4.
Fixture fixture_mod4_ray(int len = 12);

/// i -> b_{i mod 3} onto the 8-adjacent triangle b_0 = (0,0), b_1 = (1,0),
/// b_2 = (0,1). Requires len >= 6 and len divisible by 3. The Line model uses
/// [0, len]_Z; the Cycle model uses C_len.
Fixture fixture_mod3(int len = 9, DomainModel model = DomainModel::Line);

/// The 7-point X and 4-point Y with h(q_i) = v_{i mod 4}, placed at the given
/// base points.
Fixture fixture_han_example(Point origin_x = {0, 0}, Point origin_y = {0, 0});

/// The wrap C_{k m} -> C_m, i -> i mod m. Requires k >= 2 and m >= 4.
Fixture fixture_cycle_cover(int k = 2, int m = 5);

/// The wrap C_{5k} -> SC_26^{3,5}, i -> b_{i mod 5}.
Fixture fixture_wrap_sc26(int k = 2);

/// The named examples with default parameters.
std::vector<Fixture> example_fixtures();

/// Looks up a fixture by CLI name ("pr1", "mod4-ray", "mod3", "mod3-line",
/// "han", "cycle-cover-K-M", "wrap-sc26-K").
std::optional<Fixture> fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

struct RandomMapParams {
  std::size_t max_domain = 12;
  std::size_t min_domain = 2;
};

/// A continuous surjection between connected images, deterministic in `seed`.
/// Domains are random connected graphs or random lattice sets; codomains are
/// quotients of the domain (sometimes with extra edges), and some seeds give
/// cyclic lifts so that coverings appear in the population.
DigitalMap random_map(std::uint64_t seed, const RandomMapParams& params = {});

/// An arbitrary (not necessarily continuous) function between two random
/// connected images.
DigitalMap random_function(std::uint64_t seed, std::size_t max_points = 8);

struct RandomCoveringParams {
  std::size_t max_base = 12;
  std::size_t min_base = 3;
  int max_fold = 3;
};

/// A covering map, deterministic in `seed`: a cyclic cover of a cycle image or
/// a cyclic voltage lift of a random connected base whose triangle edges carry
/// zero voltage. Every result passes is_covering (checked; std::logic_error
/// otherwise).
DigitalMap random_covering(std::uint64_t seed, const RandomCoveringParams& params = {});

/// Changes one table entry of `p` so that the result stays a continuous
/// surjection but differs from `p`; nullopt when no such change exists.
std::optional<DigitalMap> perturb_map(const DigitalMap& p, std::uint64_t seed);

}  // namespace digicover
