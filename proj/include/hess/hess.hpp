#pragma once
// Everything: root systems, Weyl groups, Chevalley bases, orbit contexts,
// fiber pavings, dot actions, JSON and text renderers.

#include "hess/report.hpp"
