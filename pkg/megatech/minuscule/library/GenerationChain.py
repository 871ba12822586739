##
# @file GenerationChain.py
# @brief Ordered Derivations of Invariants
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from typing import Callable, Iterable

##
# @brief One step of a GenerationChain.
# @details A step consumes named elements that earlier steps derived and produces new named elements. It is justified by
#          facts, which are exact boolean checks, and by symbolic identities, which are pairs of Polynomials compared
#          after expansion. An identity whose degree exceeds the expansion bound is skipped rather than compared.
class ChainStep:
    ##
    # @brief Construct a ChainStep.
    # @param name A unique name for the step.
    # @param inputs The names of the elements the step consumes.
    # @param outputs The names of the elements the step produces.
    # @param facts An iterable of (name, check) pairs. Each check is a callable returning a bool. Defaults to an empty
    #              tuple.
    # @param identities An iterable of (name, degree, sides) triples. Each sides is a callable returning a pair of
    #                   Polynomials (left, right). Defaults to an empty tuple.
    def __init__(self, name: str, inputs: Iterable[str], outputs: Iterable[str], facts: Iterable[tuple] = ( ),
                 identities: Iterable[tuple] = ( )):
        self.__name = name
        self.__inputs = tuple(inputs)
        self.__outputs = tuple(outputs)
        self.__facts = tuple(facts)
        self.__identities = tuple(identities)
    def name(self) -> str:
        return self.__name
    def inputs(self) -> tuple[str, ...]:
        return self.__inputs
    def outputs(self) -> tuple[str, ...]:
        return self.__outputs
    def facts(self) -> tuple:
        return self.__facts
    def identities(self) -> tuple:
        return self.__identities
    ##
    # @brief Retrieve the largest degree of the step's identities.
    # @return An integer. 0 when the step has no identities.
    def degree(self) -> int:
        return max((degree for _, degree, _ in self.__identities), default=0)
    ##
    # @brief Check the step against a set of derived names.
    # @param derived The names derived by earlier steps.
    # @param max_degree The largest identity degree to expand.
    # @return A dictionary describing the step. Its "ok" entry is True when every input is derived, every fact holds,
    #         and every expanded identity holds.
    def check(self, derived: set, max_degree: int) -> dict:
        missing = [ name for name in self.__inputs if name not in derived ]
        facts = [ ]
        for name, check in self.__facts:
            facts.append({ "name": name, "holds": bool(check()) })
        identities = [ ]
        for name, degree, sides in self.__identities:
            if degree > max_degree:
                identities.append({ "name": name, "degree": degree, "result": "skipped" })
                continue
            left, right = sides()
            identities.append({ "name": name, "degree": degree, "result": "equal" if left == right else "differs" })
        ok = not missing and all(fact["holds"] for fact in facts) and \
             all(identity["result"] != "differs" for identity in identities)
        res = { "name": self.__name, "ok": ok, "inputs": list(self.__inputs), "outputs": list(self.__outputs),
                "facts": facts, "identities": identities }
        if missing:
            res["missing"] = missing
        return res

##
# @brief An ordered list of ChainSteps.
# @details Verification replays the steps in order. A step may only use names derived by the steps before it, so a
#          chain that verifies is a derivation of every output from the outputs of its input-free seed steps.
class GenerationChain:
    def __init__(self, steps: Iterable[ChainStep] = ( )):
        self.__steps = [ ]
        for step in steps:
            self.add(step)
    ##
    # @brief Append a step.
    # @param step The ChainStep to append.
    # @throw ValueError If a step with the same name already exists.
    def add(self, step: ChainStep) -> None:
        if any(existing.name() == step.name() for existing in self.__steps):
            raise ValueError(f"The chain already contains a step named \"{step.name()}\".")
        self.__steps.append(step)
    def steps(self) -> list[ChainStep]:
        return list(self.__steps)
    def __len__(self) -> int:
        return len(self.__steps)
    ##
    # @brief Retrieve every name the chain claims to derive.
    # @return A set of names.
    def outputs(self) -> set:
        return { name for step in self.__steps for name in step.outputs() }
    ##
    # @brief Replay the chain.
    # @param max_degree The largest identity degree to expand.
    # @param progress A callable receiving each step name before it is checked. Defaults to None.
    # @return A tuple (ok, derived, summary). derived is the set of names produced by steps that checked out. summary
    #         is a list with one dictionary per step.
    def verify(self, max_degree: int, progress: Callable[[str], None] = None) -> tuple:
        derived = set()
        summary = [ ]
        ok = True
        for step in self.__steps:
            if progress is not None:
                progress(step.name())
            result = step.check(derived, max_degree)
            summary.append(result)
            if result["ok"]:
                derived.update(step.outputs())
            else:
                ok = False
        return (ok, derived, summary)
    ##
    # @brief Count the identities of each outcome in a verification summary.
    # @param summary A summary returned by verify().
    # @return A dictionary with the keys "equal", "differs", and "skipped".
    @staticmethod
    def tally(summary: list[dict]) -> dict:
        res = { "equal": 0, "differs": 0, "skipped": 0 }
        for step in summary:
            for identity in step["identities"]:
                res[identity["result"]] += 1
        return res

__all__ = [ "ChainStep", "GenerationChain" ]
