#ifndef BBM_ENVELOPES_HPP
#define BBM_ENVELOPES_HPP

#include <functional>
#include <optional>

#include "bbm/path.hpp"

namespace bbm {

/**
 * Deterministic curves controlling the maximum and the paths of extremal
 * particles.
 *
 * front_location(t)      m(t) = sqrt(2) t - 3/(2 sqrt(2)) log t, the centering
 *                        of the BBM maximum (the traveling-wave front).
 * iid_front_location(t)  r(t) = sqrt(2) t - 1/(2 sqrt(2)) log t, the centering
 *                        for floor(e^t) independent N(0, t) variables. The gap
 *                        r - m = log(t)/sqrt(2) is what correlations cost.
 * envelope_profile       f_{t,gamma}(s): s^gamma on [0, t/2], (t-s)^gamma on
 *                        [t/2, t]; the fluctuation allowance around the
 *                        interpolating line.
 * upper_envelope         U = (s/t) m(t) + f; no particle path exceeds it on
 *                        [r, t-r] with high probability (gamma < 1/2).
 * entropic_envelope      E = (s/t) m(t) - f; with exponent alpha < 1/2 the
 *                        paths of extremal particles stay below it (entropic
 *                        repulsion), with exponent beta > 1/2 they stay above
 *                        it (lower envelope). The band between the two is the
 *                        tube.
 */
double front_location(double t);
double iid_front_location(double t);
double interpolating_line(double t, double s);
double envelope_profile(double t, double gamma, double s);
double upper_envelope(double t, double gamma, double s);
double entropic_envelope(double t, double alpha, double s);

/// Parameter set for the envelope family; validates the exponent hypotheses
/// 0 < gamma < 1/2, 0 < alpha < 1/2 < beta < 1 on construction.
struct EnvelopeSpec {
  double horizon;     // t > 1
  double gamma;       // upper envelope exponent, in (0, 1/2)
  double alpha;       // entropic envelope exponent, in (0, 1/2)
  double beta;        // lower envelope exponent, in (1/2, 1)
  double offset = 0;  // level shift y

  EnvelopeSpec(double horizon, double gamma, double alpha, double beta,
               double offset = 0.0);
};

using CurveFn = std::function<double(double)>;

struct TimeWindow {
  double lo;
  double hi;
};

/**
 * First grid time in [window.lo, window.hi] where the path lies strictly
 * above the curve, or nullopt. Ties count as non-crossing, matching the
 * strict event {x(s) > curve(s)}. The window must be covered by the path.
 */
std::optional<double> first_crossing_above(const ParticlePath& path,
                                           const CurveFn& curve,
                                           const TimeWindow& window);

/**
 * Probability that the continuous path exceeds the curve somewhere in the
 * window, given its grid values: 1 if a grid value already exceeds, otherwise
 * one minus the product over grid segments of the exact probability that a
 * Brownian bridge between consecutive grid values stays below the chord of
 * the curve. Sub-grid refinement of first_crossing_above.
 */
double crossing_probability_above(const ParticlePath& path, const CurveFn& curve,
                                  const TimeWindow& window);

}  // namespace bbm

#endif  // BBM_ENVELOPES_HPP
