#pragma once

#include "topo/gamma.hpp"
#include "topo/homology.hpp"
#include "topo/kirby.hpp"
#include "topo/parser.hpp"

#include <optional>
#include <string>

namespace topo {

// Canonical input data as text in the diagram / script formats. Generated
// in-memory by default; a FixtureProvider can read the same files from disk
// (--fixtures DIR) so they stay inspectable and editable.

// Surgered Stein diagram of the rational ball boundary: K1 the 0-framed
// former 1-handle, K2 the -(n+1)-framed 2-handle with lk(K1,K2) = -n,
// rot(K2) = 1.
std::string bn_text(const Int &n);

// Stein diagram of the linear plumbing: chain W1..W_{n-1} with framings
// -(n+2), -2, ..., -2 and rot(W1) = -n.
std::string cn_text(const Int &n);

// Lens-space surgery chain U0..U_{n+1} with framings 1, -1, -2 x (n-1), -n.
std::string lens_text(const Int &n);

// Move scripts turning one boundary presentation into the other.
std::string ball_to_lens_script_text(const Int &n);   // blow-ups, slides, blow-down
std::string ball_to_chain_script_text(const Int &n);  // slide, blow-ups, blow-down

struct FixtureProvider {
    std::optional<std::string> dir;  // when set, files override the generators

    SteinSurgeryDiagram bn(const Int &n) const;
    SteinSurgeryDiagram cn(const Int &n) const;
    SteinSurgeryDiagram lens(const Int &n) const;
    MoveScript ball_to_lens_script(const Int &n) const;
    MoveScript ball_to_chain_script(const Int &n) const;
};

SteinSurgeryDiagram diagram_from_text(const std::string &text);

// The claimed generator identifications, as maps between boundary groups.
GeneratorMap mu_lambda_map(const Int &n);  // ball -> plumbing: mu1 -> (n+1) lambda1, mu2 -> -n lambda1
GeneratorMap mu_nu_map(const Int &n);      // ball -> lens: mu1 -> nu_{n+1}, mu2 -> nu1 - nu_{n+1}

// Gamma data of the lens chain. The values are fixtures (the +1-framed
// component's rotation data is not derivable from the chain alone): odd n ->
// (n^2-n)/2 nu1; even n -> (n^2-n)/2 nu1 for {U0} and (2n^2-n)/2 nu1 for the
// odd-index sublink. See discrepancy_notes() for the published-value caveat.
GammaResult lens_gamma_fixture(const Int &n);

// Documented discrepancies between published values and the ones used here
// (warnings, never failures).
std::vector<std::string> discrepancy_notes();

}  // namespace topo
