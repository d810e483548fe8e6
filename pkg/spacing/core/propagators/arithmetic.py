"""Binary disequality with offsets: V_a + c_a != V_b + c_b."""

from spacing.core.solver.propagator import PropagationContext, Propagator


class NeqOffsetPropagator(Propagator):
    name = "neq_offset"
    idempotent = True

    def __init__(self, a: int, offset_a: int, b: int, offset_b: int):
        super().__init__([a, b])
        self.a, self.offset_a = a, offset_a
        self.b, self.offset_b = b, offset_b

    def filter(self, ctx: PropagationContext) -> None:
        shift = self.offset_a - self.offset_b
        mask_a = ctx.mask(self.a)
        if mask_a & (mask_a - 1) == 0:
            self._exclude(ctx, self.b, mask_a.bit_length() - 1 + shift)
        mask_b = ctx.mask(self.b)
        if mask_b & (mask_b - 1) == 0:
            self._exclude(ctx, self.a, mask_b.bit_length() - 1 - shift)

    @staticmethod
    def _exclude(ctx: PropagationContext, var: int, value: int) -> None:
        if value >= 0:
            ctx.remove(var, value)
