#pragma once

#include "z2syz/ring.hpp"
#include "z2syz/module.hpp"
#include "z2syz/groebner.hpp"
#include "z2syz/resolution.hpp"
#include "z2syz/hilbert.hpp"
#include "z2syz/rank.hpp"
#include "z2syz/homological.hpp"
#include "z2syz/koszul.hpp"
#include "z2syz/rational.hpp"
#include "z2syz/chainspace.hpp"
#include "z2syz/report_io.hpp"
