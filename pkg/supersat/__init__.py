# supersat/__init__.py
from __future__ import annotations

import logging

from flask import Flask, jsonify

from .extensions import limiter
from .settings import Config


def create_app(config: dict | None = None) -> Flask:
    app = Flask(__name__)
    app.config.from_object(Config)
    if config:
        app.config.update(config)
    app.logger.setLevel(getattr(logging, str(app.config["LOG_LEVEL"]).upper(), logging.WARNING))

    # ======================
    # Initialize Extensions
    # ======================
    limiter.init_app(app)

    # ======================
    # Register Blueprints
    # ======================
    from .routes import register_blueprints

    register_blueprints(app)

    # ======================
    # CLI (`flask supersat ...`)
    # ======================
    from .cli import cli

    app.cli.add_command(cli, "supersat")

    # ======================
    # Error handlers
    # ======================
    from .errors import SupersatError

    @app.errorhandler(SupersatError)
    def supersat_error(e):
        return jsonify({"success": False, "error": str(e)}), 400

    @app.errorhandler(404)
    def not_found(e):
        return jsonify({"success": False, "error": "not found"}), 404

    @app.errorhandler(429)
    def ratelimit_handler(e):
        return jsonify({"success": False, "error": "Too many requests. Please try again later."}), 429

    return app
