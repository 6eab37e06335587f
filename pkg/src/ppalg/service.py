"""HTTP service exposing interactive mutation sessions.

A session holds a basic complete rigid module in slot order plus the seed
propagated alongside it. Every payload the explorer needs (quiver, matrix,
cluster variables, exchange sequences) is computed here; the client only
renders. Mutations on one session are serialized by a per-session lock and
every mutation runs two self-checks server-side: the involution property
and agreement of the propagated seed matrix with the quiver-derived one.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import uuid
from collections import OrderedDict
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .approx import (MutationDirectionError, canonical_slots, initial_rigid,
                     mutate_slots)
from .catalog import ModuleSum, build_catalog
from .cluster import Seed, seed_mutate
from .endo import exchange_data
from .quivers import DynkinType

SESSION_CAP = 64


class CreateRequest(BaseModel):
    type: str
    history: list[int] | None = None


class MutateRequest(BaseModel):
    k: int


class Session:
    def __init__(self, dt, catalog, slots):
        self.id = uuid.uuid4().hex[:12]
        self.dt = dt
        self.catalog = catalog
        self.initial = tuple(slots)
        self.slots = tuple(slots)
        ed = exchange_data(ModuleSum.from_ids(catalog, slots), order=slots)
        self.seed = Seed.initial(catalog.r, ed.b_cols)
        self.history = []           # [{"k": int, "display": str}]
        self.lock = threading.Lock()

    def state_hash(self):
        blob = json.dumps({"type": str(self.dt),
                           "slots": list(self.slots),
                           "history": [h["k"] for h in self.history]},
                          sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def state(self):
        cat = self.catalog
        ed = exchange_data(ModuleSum.from_ids(cat, self.slots),
                           order=self.slots)
        nodes = []
        for p, i in enumerate(self.slots):
            e = cat.entry(i)
            nodes.append({"position": p + 1, "id": i, "name": e.name,
                          "label": e.display(), "dims": list(e.dims),
                          "projective": e.projective})
        edges = [{"src": i + 1, "tgt": j + 1, "mult": ed.gamma[i][j]}
                 for i in range(cat.r) for j in range(cat.r)
                 if ed.gamma[i][j]]
        return {
            "session": self.id,
            "type": str(self.dt),
            "r": cat.r,
            "n": cat.n,
            "nodes": nodes,
            "edges": edges,
            "b_cols": ed.b_cols,
            "cluster_variables": [str(x) for x in self.seed.variables],
            "exchangeable": [p + 1 for p, i in enumerate(self.slots)
                             if not cat.entry(i).projective],
            "history": list(self.history),
            "state_hash": self.state_hash(),
        }

    def mutate(self, k):
        """One in-place mutation step; returns the exchange sequence."""
        before = self.slots
        new_slots, seq = mutate_slots(self.catalog, self.slots, k)
        back, _ = mutate_slots(self.catalog, new_slots, k)
        if back != before:
            raise HTTPException(status_code=500, detail={
                "bug": "mutation involution failed",
                "slots": list(before), "direction": k,
                "forward": list(new_slots), "back": list(back)})
        new_seed = seed_mutate(self.seed, k)
        ed = exchange_data(ModuleSum.from_ids(self.catalog, new_slots),
                           order=new_slots)
        if new_seed.matrix != ed.b_cols:
            raise HTTPException(status_code=500, detail={
                "bug": "seed matrix disagrees with the quiver",
                "slots": list(new_slots), "direction": k,
                "seed_matrix": new_seed.matrix, "quiver_matrix": ed.b_cols})
        self.slots = new_slots
        self.seed = new_seed
        self.history.append({"k": k, "display": seq.display()})
        return seq


def _static_dir():
    """Directory with the built browser explorer, if present.

    Defaults to frontend/dist next to the source tree; PPALG_STATIC
    overrides. Returns None when there is nothing to serve, so the API
    works without the frontend ever having been built.
    """
    override = os.environ.get("PPALG_STATIC")
    if override:
        path = Path(override)
        return path if path.is_dir() else None
    path = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return path if path.is_dir() else None


def _parse_type(s):
    try:
        dt = DynkinType.parse(s)
        build_catalog(dt)
        return dt
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


def create_app():
    app = FastAPI(title="rigid-module mutation sessions")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions = OrderedDict()
    registry_lock = threading.Lock()

    def get_session(sid):
        with registry_lock:
            if sid not in sessions:
                raise HTTPException(status_code=404,
                                    detail=f"no session {sid}")
            sessions.move_to_end(sid)
            return sessions[sid]

    @app.post("/session")
    def create_session(req: CreateRequest):
        dt = _parse_type(req.type)
        cat = build_catalog(dt)
        T = initial_rigid(cat)
        s = Session(dt, cat, canonical_slots(T))
        for k in req.history or []:
            try:
                s.mutate(k)
            except MutationDirectionError as e:
                raise HTTPException(status_code=409,
                                    detail=f"history replay: {e}")
        with registry_lock:
            sessions[s.id] = s
            while len(sessions) > SESSION_CAP:
                sessions.popitem(last=False)
        return s.state()

    @app.get("/session/{sid}")
    def read_session(sid: str):
        return get_session(sid).state()

    @app.post("/session/{sid}/mutate")
    def mutate_session(sid: str, req: MutateRequest):
        s = get_session(sid)
        with s.lock:
            try:
                seq = s.mutate(req.k)
            except MutationDirectionError as e:
                raise HTTPException(status_code=409, detail=str(e))
            state = s.state()
        state["sequence"] = seq.to_json()
        return state

    @app.get("/session/{sid}/export")
    def export_session(sid: str):
        s = get_session(sid)
        with s.lock:
            return {"type": str(s.dt),
                    "initial": list(s.initial),
                    "history": [h["k"] for h in s.history],
                    "sequences": [h["display"] for h in s.history],
                    "state_hash": s.state_hash()}

    @app.get("/catalog/{dtype}")
    def read_catalog(dtype: str):
        dt = _parse_type(dtype)
        return build_catalog(dt).to_json()

    static = _static_dir()
    if static is not None:
        app.mount("/", StaticFiles(directory=static, html=True),
                  name="explorer")

    return app
