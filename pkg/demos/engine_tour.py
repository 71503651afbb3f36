"""
A tour of the inference engine on a toy network
===============================================

Builds a three-node network by hand, walks through the factor
operations variable elimination is made of, and checks the result
against the brute-force full joint.
"""

from airavata.factors import Variable, factor_marginalize, factor_product, factor_reduce
from airavata.inference import brute_force_marginal, elimination_order, query_marginal
from airavata.network import Cpd, Network

# burglary -> alarm <- quake, the classic sprinkler-shaped triple
burglary = Variable("burglary", ("no", "yes"))
quake = Variable("quake", ("no", "yes"))
alarm = Variable("alarm", ("no", "yes"))

net = Network(
    [burglary, quake, alarm],
    [("burglary", "alarm"), ("quake", "alarm")],
    [
        Cpd(burglary, (), [0.99, 0.01]),
        Cpd(quake, (), [0.98, 0.02]),
        # rows iterate parent configs with burglary most significant
        Cpd(alarm, (burglary, quake), [
            [0.999, 0.001],
            [0.71, 0.29],
            [0.06, 0.94],
            [0.05, 0.95],
        ]),
    ],
)

# Step 1: every CPD is just a factor over parents + child.
f_alarm = net.cpd_for("alarm").to_factor()
print("alarm factor scope:", f_alarm.names())

# Step 2: evidence slices factors down before any multiplication.
f_given = factor_reduce(f_alarm, "alarm", "yes")
print("after clamping alarm=yes:", f_given.names(), [float(v) for v in f_given.values])

# Step 3: product then marginalization is one elimination step.
joint = factor_product(net.cpd_for("burglary").to_factor(), f_given)
no_burglary = factor_marginalize(joint, "burglary")
print("after summing out burglary:", [float(v) for v in no_burglary.values])

# The query wrapper does those steps along a heuristic order.
order = elimination_order(net, ["burglary"], {"alarm": "yes"})
print("elimination order for P(burglary | alarm=yes):", order)

posterior = query_marginal(net, ["burglary"], {"alarm": "yes"})
print("P(burglary | alarm=yes) =", tuple(round(p, 4) for p in posterior.table))

# Same answer from materializing all eight joint entries.
check = brute_force_marginal(net, ["burglary"], {"alarm": "yes"})
print("brute force agrees:", posterior.table == check.table)
